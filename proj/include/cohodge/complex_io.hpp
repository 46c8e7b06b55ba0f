#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cohodge/chain_complex.hpp"

namespace cohodge {

/// One named cycle bundled with a complex file.
struct NamedCycle {
    int degree = 0;
    std::vector<Int> coefficients;  // cell order of that degree
};

/**
 * In-memory form of a complex document: the validated complex, an optional
 * scalar block and named cycles.  The on-disk format is JSON; see the README
 * for the grammar.  Integer coefficients are decimal strings so arbitrary
 * precision survives the round trip.
 */
struct ComplexDocument {
    std::string name;
    ChainComplex complex;
    std::optional<ScalarStructure> scalars;
    std::map<std::string, NamedCycle> cycles;
};

ComplexDocument parseComplexDocument(const std::string& jsonText);
std::string serializeComplexDocument(const ComplexDocument& doc);
ComplexDocument loadComplexFile(const std::string& path);
void saveComplexFile(const ComplexDocument& doc, const std::string& path);

}  // namespace cohodge
