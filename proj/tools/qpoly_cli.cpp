#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qpoly/catalog.hpp"
#include "qpoly/errors.hpp"
#include "qpoly/gram.hpp"
#include "qpoly/intersection.hpp"
#include "qpoly/report.hpp"
#include "qpoly/spectral.hpp"
#include "qpoly/version.hpp"

namespace fs = std::filesystem;
using namespace qpoly;

namespace {

// Accepts "1e-30", "a/b", or a plain decimal.
Rational parse_width(const std::string& s) {
    auto epos = s.find('e');
    if (epos == std::string::npos) epos = s.find('E');
    if (epos != std::string::npos) {
        Rational mant(s.substr(0, epos));
        mant.canonicalize();
        int exp = std::stoi(s.substr(epos + 1));
        BigInt p10;
        mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned>(exp < 0 ? -exp : exp));
        Rational r = exp < 0 ? Rational(mant / p10) : Rational(mant * p10);
        r.canonicalize();
        return r;
    }
    Rational r(s);
    r.canonicalize();
    return r;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string cache_key(const std::string& array_text, const Rational& precision) {
    std::ostringstream ss;
    ss << std::hex << fnv1a(array_text + "|" + kVersion + "|" + precision.get_str());
    return ss.str();
}

fs::path resolve_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("QPOLY_CACHE_DIR")) return env;
    return ".qpoly-cache";
}

int emit_check(const std::string& array, bool json, bool oracle, const Rational& precision) {
    ReportOptions opts;
    opts.run_oracle = oracle;
    opts.zero_width = precision;
    ReportResult res = make_report(array, opts);
    if (json) {
        std::cout << res.report.dump() << "\n";
    } else {
        const Json& r = res.report;
        std::cout << "array:          " << array << "\n";
        if (!r["feasible"].get<bool>()) {
            std::cout << "feasible:       no (" << r["error"]["message"].get<std::string>()
                      << ")\n";
            return res.exit_code;
        }
        std::cout << "D:              " << r["D"].get<int>() << "\n";
        std::cout << "|X|:            " << r["n"].get<std::string>() << "\n";
        std::cout << "primitive:      " << (r["primitive"].get<bool>() ? "yes" : "no") << "\n";
        std::cout << "det(G):         " << r["det_G"].get<std::string>() << "\n";
        if (r["is_q_polynomial"].is_boolean())
            std::cout << "Q-polynomial:   " << (r["is_q_polynomial"].get<bool>() ? "yes" : "no")
                      << "\n";
        else
            std::cout << "Q-polynomial:   n/a (primitivity hypothesis fails)\n";
        if (r.contains("oracle")) {
            const Json& o = r["oracle"];
            std::cout << "oracle:         ordering "
                      << (o["ordering_found"].get<bool>() ? "found" : "not found");
            if (o.contains("agrees_with_gram_gate"))
                std::cout << ", " << (o["agrees_with_gram_gate"].get<bool>() ? "agrees" : "DISAGREES")
                          << " with det(G) gate";
            std::cout << "\n";
        }
    }
    return res.exit_code;
}

int emit_params(const std::string& array, bool json) {
    IntersectionArray arr = parse_array(array);
    ParameterTable pt = compute_parameter_table(arr);
    if (json) {
        Json out;
        out["input"] = array;
        Json p = Json::array();
        for (int h = 0; h <= arr.D; ++h) {
            Json ph = Json::array();
            for (int i = 0; i <= arr.D; ++i) {
                Json pi = Json::array();
                for (int j = 0; j <= arr.D; ++j) pi.push_back(pt.at(h, i, j).get_str());
                ph.push_back(pi);
            }
            p.push_back(ph);
        }
        out["p"] = p;
        std::cout << out.dump() << "\n";
    } else {
        for (int h = 0; h <= arr.D; ++h) {
            std::cout << "h = " << h << ":\n";
            for (int i = 0; i <= arr.D; ++i) {
                for (int j = 0; j <= arr.D; ++j)
                    std::cout << (j ? " " : "  ") << pt.at(h, i, j).get_str();
                std::cout << "\n";
            }
        }
    }
    return 0;
}

int emit_gram(const std::string& array, const std::string& format) {
    IntersectionArray arr = parse_array(array);
    GramMatrix g = build_gram(compute_parameter_table(arr));
    const std::size_t sz = g.entries.rows();
    if (format == "csv") {
        for (std::size_t i = 0; i < sz; ++i) {
            for (std::size_t j = 0; j < sz; ++j)
                std::cout << (j ? "," : "") << g.entries(i, j).get_str();
            std::cout << "\n";
        }
    } else {
        Json out;
        out["input"] = array;
        out["size"] = sz;
        Json rows = Json::array();
        for (std::size_t i = 0; i < sz; ++i) {
            Json row = Json::array();
            for (std::size_t j = 0; j < sz; ++j) row.push_back(g.entries(i, j).get_str());
            rows.push_back(row);
        }
        out["G"] = rows;
        out["det_G"] = exact_determinant(g.entries).get_str();
        std::cout << out.dump() << "\n";
    }
    return 0;
}

int emit_spectrum(const std::string& array, const Rational& precision, int max_rounds) {
    IntersectionArray arr = parse_array(array);
    OracleResult oracle = run_spectral_oracle(arr, precision, max_rounds);
    Json out;
    out["input"] = array;
    Json eigs = Json::array(), mults = Json::array();
    for (const auto& th : oracle.sd.theta)
        eigs.push_back(Json::array({th.lo.get_str(), th.hi.get_str()}));
    for (const auto& m : oracle.sd.m)
        mults.push_back(Json::array({m.lo.get_str(), m.hi.get_str()}));
    out["eigenvalues"] = eigs;
    out["multiplicities"] = mults;
    Json krein;
    const int D = arr.D;
    Json nonzero = Json::array();
    for (int h = 0; h <= D; ++h)
        for (int i = 0; i <= D; ++i)
            for (int j = i; j <= D; ++j)
                if (oracle.kt.flag(h, i, j) == ZeroFlag::CertNonzero)
                    nonzero.push_back(Json::array({h, i, j}));
    krein["certified_nonzero"] = nonzero;
    out["krein"] = krein;
    out["q_ordering_found"] = oracle.ordering.has_value();
    if (oracle.ordering) out["q_ordering"] = *oracle.ordering;
    std::cout << out.dump() << "\n";
    return 0;
}

int run_catalog(const std::string& file, const std::string& filter, const std::string& cache_flag,
                bool oracle, const Rational& precision) {
    std::vector<CatalogEntry> entries;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) {
            std::cerr << "cannot open catalog file " << file << "\n";
            return 3;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        entries = parse_catalog(buf.str());
    } else {
        entries = shipped_catalog();
    }

    fs::path cache_dir = resolve_cache_dir(cache_flag);
    std::error_code ec;
    fs::create_directories(cache_dir, ec);

    int worst = 0;
    for (const auto& e : entries) {
        if (!filter.empty() && !e.has_tag(filter) &&
            e.name.find(filter) == std::string::npos)
            continue;
        fs::path cache_file = cache_dir / (cache_key(e.array_text, precision) + ".json");
        Json line;
        line["name"] = e.name;
        if (fs::exists(cache_file)) {
            std::ifstream in(cache_file);
            Json cached = Json::parse(in, nullptr, false);
            if (!cached.is_discarded()) {
                line["cached"] = true;
                line["report"] = cached;
                std::cout << line.dump() << "\n";
                continue;
            }
        }
        ReportOptions opts;
        opts.run_oracle = oracle;
        opts.zero_width = precision;
        ReportResult res = make_report(e.array_text, opts);
        worst = std::max(worst, res.exit_code == 1 ? 0 : res.exit_code);
        line["cached"] = false;
        line["report"] = res.report;
        std::cout << line.dump() << "\n";
        std::ofstream out(cache_file);
        out << res.report.dump() << "\n";
    }
    return worst;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Q-polynomiality of distance-regular graphs from the intersection array"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string array, format = "json", filter, catalog_file, cache_dir;
    std::string precision_text = "1e-30";
    bool json = false, oracle = false, csv = false;
    int max_rounds = 8;

    auto add_common = [&](CLI::App* sub, bool needs_array) {
        if (needs_array) sub->add_option("--array", array, "intersection array text")->required();
        sub->add_option("--precision", precision_text,
                        "zero-width threshold for interval zero calls (e.g. 1e-30)");
    };

    CLI::App* check = app.add_subcommand("check", "decide Q-polynomiality via det(G)");
    add_common(check, true);
    check->add_flag("--json", json, "machine-readable report");
    check->add_flag("--oracle", oracle, "also run the spectral Krein oracle and cross-check");

    CLI::App* params = app.add_subcommand("params", "dump the intersection-number table");
    add_common(params, true);
    params->add_flag("--json", json, "machine-readable output");

    CLI::App* gram = app.add_subcommand("gram", "dump the Gram matrix G");
    add_common(gram, true);
    gram->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    gram->add_flag("--csv", csv, "shorthand for --format csv");

    CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalue intervals and Krein data");
    add_common(spectrum, true);
    spectrum->add_option("--max-rounds", max_rounds, "refinement iteration budget");

    CLI::App* catalog = app.add_subcommand("catalog", "operate on the shipped catalog");
    CLI::App* catalog_run = catalog->add_subcommand("run", "run every catalog entry");
    catalog_run->add_option("--filter", filter, "only entries with this tag or name substring");
    catalog_run->add_option("--file", catalog_file, "catalog data file (default: shipped)");
    catalog_run->add_option("--cache-dir", cache_dir,
                            "cache directory (default: $QPOLY_CACHE_DIR or .qpoly-cache)");
    catalog_run->add_flag("--oracle", oracle, "also run the spectral oracle per entry");
    catalog_run->add_option("--precision", precision_text, "zero-width threshold");
    catalog->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        Rational precision = parse_width(precision_text);
        if (check->parsed()) return emit_check(array, json, oracle, precision);
        if (params->parsed()) return emit_params(array, json);
        if (gram->parsed()) return emit_gram(array, csv ? "csv" : format);
        if (spectrum->parsed()) return emit_spectrum(array, precision, max_rounds);
        if (catalog->parsed())
            return run_catalog(catalog_file, filter, cache_dir, oracle, parse_width(precision_text));
    } catch (const HypothesisError& e) {
        std::cerr << "error: " << e.what() << " (det G = " << e.det_g << ")\n";
        return 2;
    } catch (const FeasibilityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DiameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PrecisionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
