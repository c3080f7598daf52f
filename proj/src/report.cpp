#include "qpoly/report.hpp"

#include <chrono>

#include "qpoly/errors.hpp"
#include "qpoly/gram.hpp"
#include "qpoly/intersection.hpp"
#include "qpoly/spectral.hpp"
#include "qpoly/version.hpp"

namespace qpoly {

namespace {

Json interval_json(const RationalInterval& iv) {
    return Json::array({iv.lo.get_str(), iv.hi.get_str()});
}

Json error_json(const std::string& type, const std::string& message) {
    Json e;
    e["type"] = type;
    e["message"] = message;
    return e;
}

}  // namespace

ReportResult make_report(const std::string& array_text, const ReportOptions& opts) {
    auto start = std::chrono::steady_clock::now();
    ReportResult res;
    Json& r = res.report;
    r["input"] = array_text;
    r["version"] = kVersion;

    IntersectionArray arr;
    try {
        arr = parse_array(array_text);
    } catch (const FeasibilityError& e) {
        r["feasible"] = false;
        r["error"] = error_json("FeasibilityError", e.what());
        res.exit_code = 2;
        return res;
    } catch (const QpolyError& e) {  // ParseError, DiameterError
        r["feasible"] = false;
        r["error"] = error_json(dynamic_cast<const DiameterError*>(&e) ? "DiameterError"
                                                                       : "ParseError",
                                e.what());
        res.exit_code = 2;
        return res;
    }

    r["feasible"] = true;
    r["D"] = arr.D;
    r["n"] = arr.n.get_str();

    try {
        QPolyVerdict verdict = decide_q_polynomial(arr);
        r["primitive"] = true;
        r["det_G"] = verdict.det_g.get_str();
        r["is_q_polynomial"] = *verdict.is_q_polynomial;
        res.exit_code = *verdict.is_q_polynomial ? 0 : 1;
    } catch (const HypothesisError& e) {
        r["primitive"] = false;
        r["det_G"] = e.det_g;
        r["is_q_polynomial"] = nullptr;
        r["error"] = error_json("HypothesisError", e.what());
        res.exit_code = 2;
    } catch (const FeasibilityError& e) {
        r["error"] = error_json("FeasibilityError", e.what());
        res.exit_code = 2;
        return res;
    }

    if (opts.run_oracle) {
        try {
            OracleResult oracle = run_spectral_oracle(arr, opts.zero_width, opts.max_rounds);
            Json o;
            o["ordering_found"] = oracle.ordering.has_value();
            if (oracle.ordering) o["ordering"] = *oracle.ordering;
            if (r["primitive"].is_boolean() && r["primitive"].get<bool>()) {
                bool det_zero = r["det_G"].get<std::string>() == "0";
                o["agrees_with_gram_gate"] = (oracle.ordering.has_value() == det_zero);
                if (!o["agrees_with_gram_gate"].get<bool>()) res.exit_code = 3;
            }
            r["oracle"] = o;
            Json spec;
            Json eigs = Json::array(), mults = Json::array();
            for (const auto& th : oracle.sd.theta) eigs.push_back(interval_json(th));
            for (const auto& m : oracle.sd.m) mults.push_back(interval_json(m));
            spec["eigenvalues"] = eigs;
            spec["multiplicities"] = mults;
            r["spectrum"] = spec;
        } catch (const PrecisionError& e) {
            r["error"] = error_json("PrecisionError", e.what());
            res.exit_code = 3;
        }
    }

    auto stop = std::chrono::steady_clock::now();
    r["timing_ms"] = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count());
    return res;
}

}  // namespace qpoly
