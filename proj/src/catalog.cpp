#include "qpoly/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "qpoly/errors.hpp"

namespace qpoly {

bool CatalogEntry::has_tag(const std::string& t) const {
    return std::find(tags.begin(), tags.end(), t) != tags.end();
}

std::vector<CatalogEntry> parse_catalog(const std::string& text) {
    std::vector<CatalogEntry> out;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, '|')) fields.push_back(field);
        if (fields.size() < 2) throw ParseError("catalog line needs at least name|array: " + line);
        CatalogEntry e;
        e.name = fields[0];
        e.array_text = fields[1];
        if (fields.size() > 2 && !fields[2].empty()) {
            std::istringstream ts(fields[2]);
            std::string tag;
            while (std::getline(ts, tag, ',')) e.tags.push_back(tag);
        }
        e.expected = fields.size() > 3 ? fields[3] : "-";
        e.notes = fields.size() > 4 ? fields[4] : "";
        out.push_back(std::move(e));
    }
    return out;
}

namespace {

// Mirror of data/catalog.txt so library consumers and tests do not depend on
// a runtime file location.
const char* kShippedCatalog = R"(
hamming-3-3|6,4,2;1,2,3|hamming|q-polynomial[oracle]|Hamming graph H(3,3), 27 vertices
hamming-3-4|9,6,3;1,2,3|hamming|q-polynomial[oracle]|Hamming graph H(3,4), 64 vertices
hamming-3-5|12,8,4;1,2,3|hamming|q-polynomial[oracle]|Hamming graph H(3,5), 125 vertices
hamming-4-3|8,6,4,2;1,2,3,4|hamming|q-polynomial[oracle]|Hamming graph H(4,3), 81 vertices
johnson-7-3|12,6,2;1,4,9|johnson|q-polynomial[oracle]|Johnson graph J(7,3), 35 vertices
johnson-8-3|15,8,3;1,4,9|johnson|q-polynomial[oracle]|Johnson graph J(8,3), 56 vertices
johnson-9-3|18,10,4;1,4,9|johnson|q-polynomial[oracle]|Johnson graph J(9,3), 84 vertices
johnson-8-4|16,9,4,1;1,4,9,16|johnson|imprimitive[array]|J(8,4) is antipodal (set complementation)
cycle-7|2,1,1;1,1,1|cycle|q-polynomial[oracle]|7-cycle
cycle-9|2,1,1,1;1,1,1,1|cycle|imprimitive[array]|9-cycle: distance-3 graph is three disjoint triangles
cycle-11|2,1,1,1,1;1,1,1,1,1|cycle|q-polynomial[oracle]|11-cycle
petersen-line-graph|4,2,1;1,1,4|line-graph|imprimitive[array]|line graph of Petersen, antipodal 3-cover of K5
cube-3|3,2,1;1,2,3|hypercube,bipartite|imprimitive[array]|3-cube, bipartite and antipodal
coxeter|3,2,2,1;1,1,1,2|sporadic|not-q-polynomial[oracle]|Coxeter graph, 28 vertices
)";

}  // namespace

const std::vector<CatalogEntry>& shipped_catalog() {
    static const std::vector<CatalogEntry> entries = parse_catalog(kShippedCatalog);
    return entries;
}

}  // namespace qpoly
