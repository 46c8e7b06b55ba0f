#include <catch2/catch_amalgamated.hpp>

#include <functional>

#include "cohodge/complex_io.hpp"
#include "cohodge/corpus.hpp"
#include "cohodge/error.hpp"

using namespace cohodge;

namespace {

bool failsWith(Errc code, const std::function<void()>& fn)
{
    try
    {
        fn();
    }
    catch (const Error& e)
    {
        return e.code() == code;
    }
    return false;
}

void requireEquivalent(const ComplexDocument& a, const ComplexDocument& b)
{
    REQUIRE(a.name == b.name);
    REQUIRE(a.complex.topDegree() == b.complex.topDegree());
    for (int k = 0; k <= a.complex.topDegree(); ++k)
    {
        REQUIRE(a.complex.cellNames(k) == b.complex.cellNames(k));
        REQUIRE(a.complex.boundary(k) == b.complex.boundary(k));
    }
    REQUIRE(a.scalars.has_value() == b.scalars.has_value());
    if (a.scalars)
    {
        REQUIRE(a.scalars->beta == b.scalars->beta);
        REQUIRE(a.scalars->energy == b.scalars->energy);
    }
    REQUIRE(a.cycles.size() == b.cycles.size());
    for (const auto& [name, cycle] : a.cycles)
    {
        REQUIRE(b.cycles.count(name) == 1);
        REQUIRE(b.cycles.at(name).degree == cycle.degree);
        REQUIRE(b.cycles.at(name).coefficients == cycle.coefficients);
    }
}

}  // namespace

TEST_CASE("every bundled document round-trips")
{
    for (const ComplexDocument& doc : corpus::all())
    {
        std::string text = serializeComplexDocument(doc);
        ComplexDocument parsed = parseComplexDocument(text);
        requireEquivalent(doc, parsed);
        // Serialization is stable after one round trip.
        REQUIRE(serializeComplexDocument(parsed) == text);
    }
}

TEST_CASE("bundled data files match the in-memory corpus")
{
    const std::string dir = COHODGE_DATA_DIR;
    for (const ComplexDocument& doc : corpus::all())
    {
        ComplexDocument loaded = loadComplexFile(dir + "/" + doc.name + ".json");
        requireEquivalent(doc, loaded);
    }
}

TEST_CASE("parser rejects malformed documents")
{
    SECTION("invalid JSON")
    {
        REQUIRE(failsWith(Errc::ParseError, [] { parseComplexDocument("{oops"); }));
    }
    SECTION("unknown face cell")
    {
        const char* text = R"({
          "cells": {"0": ["v"], "1": ["e"]},
          "boundary": {"1": {"e": {"nope": "1"}}}
        })";
        REQUIRE(failsWith(Errc::ParseError, [&] { parseComplexDocument(text); }));
    }
    SECTION("unknown cell in a cycle")
    {
        const char* text = R"({
          "cells": {"0": ["v"], "1": ["e"]},
          "cycles": {"c": {"degree": 0, "coefficients": {"ghost": "1"}}}
        })";
        REQUIRE(failsWith(Errc::ParseError, [&] { parseComplexDocument(text); }));
    }
    SECTION("bad integer literal")
    {
        const char* text = R"({
          "cells": {"0": ["v"], "1": ["e"]},
          "boundary": {"1": {"e": {"v": "2x"}}}
        })";
        REQUIRE(failsWith(Errc::ParseError, [&] { parseComplexDocument(text); }));
    }
    SECTION("boundary that is not a complex")
    {
        const char* text = R"({
          "cells": {"0": ["v"], "1": ["e"], "2": ["f"]},
          "boundary": {"1": {"e": {"v": "1"}}, "2": {"f": {"e": "1"}}}
        })";
        REQUIRE(failsWith(Errc::NotAComplex, [&] { parseComplexDocument(text); }));
    }
}

TEST_CASE("arbitrary-precision coefficients survive the round trip")
{
    std::string big(60, '9');  // 60-digit coefficient
    std::string text = std::string(R"({
      "cells": {"0": ["v"], "1": ["e"]},
      "boundary": {"1": {"e": {"v": ")") + big + R"("}}}
    })";
    ComplexDocument doc = parseComplexDocument(text);
    REQUIRE(doc.complex.boundary(1)(0, 0).get_str() == big);
    ComplexDocument again = parseComplexDocument(serializeComplexDocument(doc));
    REQUIRE(again.complex.boundary(1)(0, 0).get_str() == big);
}
