#pragma once

#include <string>
#include <vector>

#include "grassmoduli/moduli.hpp"
#include "grassmoduli/schur.hpp"

namespace grassmoduli::io {

/// JSON renderers. Big integers are emitted as decimal strings; center
/// weights as {"num": ..., "den": ...} objects in reduced form; object keys
/// keep insertion order so that parse + re-dump is byte-identical.
std::string to_json(const SchurExpansion& expansion, int indent = 2);
std::string to_json(const RectSquareComponent& component, int indent = 2);
std::string to_json(const std::vector<ComponentReport>& reports,
                    int indent = 2);
std::string to_json(const ModuliReport& report, int indent = 2);

/// Normalizes a JSON document by parsing and re-dumping it with the given
/// indent (ordered keys preserved); used to test round-trip stability.
std::string rewrite_json(const std::string& text, int indent = 2);

/// CSV renderers: header row, comma separator, list-valued fields quoted
/// (partitions as "2,1,1", several partitions separated by ';').
std::string to_csv(const std::vector<ComponentReport>& reports);
std::string to_csv(const ModuliReport& report);

/// Plain-text tables for terminal output.
std::string to_table(const std::vector<ComponentReport>& reports);
std::string to_table(const ModuliReport& report);

}  // namespace grassmoduli::io
