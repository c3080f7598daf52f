#pragma once

#include <string>
#include <vector>

namespace qpoly {

// One line of the catalog data file: name|array|tags|expected|notes.
// `expected` carries a provenance suffix in brackets, e.g.
// "q-polynomial[oracle]" or "imprimitive[array]"; "-" means unrecorded.
struct CatalogEntry {
    std::string name;
    std::string array_text;
    std::vector<std::string> tags;
    std::string expected;
    std::string notes;

    bool has_tag(const std::string& t) const;
};

std::vector<CatalogEntry> parse_catalog(const std::string& text);

// The catalog shipped with the tool (same content as data/catalog.txt).
const std::vector<CatalogEntry>& shipped_catalog();

}  // namespace qpoly
