#include "cohodge/complex_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cohodge/error.hpp"

namespace cohodge {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

Int parseBigInt(const json& value, const std::string& where)
{
    std::string text;
    if (value.is_string())
        text = value.get<std::string>();
    else if (value.is_number_integer())
        text = std::to_string(value.get<long long>());
    else
        fail(Errc::ParseError, "expected integer string at " + where);
    Int out;
    if (mpz_set_str(out.get_mpz_t(), text.c_str(), 10) != 0)
        fail(Errc::ParseError, "bad integer literal '" + text + "' at " + where);
    return out;
}

int parseDegreeKey(const std::string& key)
{
    try
    {
        size_t pos = 0;
        int d = std::stoi(key, &pos);
        if (pos != key.size() || d < 0)
            throw std::invalid_argument(key);
        return d;
    }
    catch (const std::exception&)
    {
        fail(Errc::ParseError, "bad degree key '" + key + "'");
    }
}

}  // namespace

ComplexDocument parseComplexDocument(const std::string& jsonText)
{
    json doc;
    try
    {
        doc = json::parse(jsonText);
    }
    catch (const json::exception& e)
    {
        fail(Errc::ParseError, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("cells") || !doc["cells"].is_object())
        fail(Errc::ParseError, "document must be an object with a 'cells' block");

    // Cells per degree; degrees must form a contiguous range starting at 0.
    std::map<int, std::vector<std::string>> cellsByDegree;
    for (const auto& [key, value] : doc["cells"].items())
    {
        int degree = parseDegreeKey(key);
        if (!value.is_array())
            fail(Errc::ParseError, "cells." + key + " must be an array");
        std::vector<std::string> names;
        for (const auto& name : value)
        {
            if (!name.is_string())
                fail(Errc::ParseError, "cell names must be strings (degree " + key + ")");
            names.push_back(name.get<std::string>());
        }
        cellsByDegree[degree] = std::move(names);
    }
    if (cellsByDegree.empty())
        fail(Errc::ParseError, "no cell degrees given");
    // Sparse boundary blocks are densified at ingestion; past this size the
    // dense-only build refuses the input.
    constexpr int kDensifyLimit = 512;
    for (const auto& [degree, names] : cellsByDegree)
        if (static_cast<int>(names.size()) > kDensifyLimit)
            fail(Errc::Unsupported, "degree " + std::to_string(degree) + " has more than " +
                                        std::to_string(kDensifyLimit) + " cells");
    const int top = cellsByDegree.rbegin()->first;
    std::vector<std::vector<std::string>> cells(top + 1);
    for (auto& [degree, names] : cellsByDegree)
        cells[degree] = std::move(names);

    // Cell index lookup per degree.
    std::vector<std::map<std::string, int>> lookup(top + 1);
    for (int k = 0; k <= top; ++k)
        for (size_t i = 0; i < cells[k].size(); ++i)
            if (!lookup[k].emplace(cells[k][i], static_cast<int>(i)).second)
                fail(Errc::ParseError, "duplicate cell name '" + cells[k][i] + "' in degree " + std::to_string(k));

    std::vector<IntMatrix> boundaries;
    for (int k = 1; k <= top; ++k)
        boundaries.emplace_back(static_cast<int>(cells[k - 1].size()), static_cast<int>(cells[k].size()));

    if (doc.contains("boundary"))
    {
        if (!doc["boundary"].is_object())
            fail(Errc::ParseError, "'boundary' must be an object");
        for (const auto& [key, block] : doc["boundary"].items())
        {
            int degree = parseDegreeKey(key);
            if (degree < 1 || degree > top)
                fail(Errc::ParseError, "boundary degree " + key + " out of range");
            if (!block.is_object())
                fail(Errc::ParseError, "boundary." + key + " must be an object");
            IntMatrix& del = boundaries[degree - 1];
            for (const auto& [cellName, faces] : block.items())
            {
                auto cit = lookup[degree].find(cellName);
                if (cit == lookup[degree].end())
                    fail(Errc::ParseError, "unknown " + std::to_string(degree) + "-cell '" + cellName + "'");
                if (!faces.is_object())
                    fail(Errc::ParseError, "boundary of '" + cellName + "' must map faces to coefficients");
                for (const auto& [faceName, coeff] : faces.items())
                {
                    auto fit = lookup[degree - 1].find(faceName);
                    if (fit == lookup[degree - 1].end())
                        fail(Errc::ParseError, "unknown face cell '" + faceName + "' in boundary of '" + cellName + "'");
                    del(fit->second, cit->second) = parseBigInt(coeff, "boundary of '" + cellName + "'");
                }
            }
        }
    }

    ComplexDocument out{doc.value("name", std::string{}),
                        ChainComplex(std::move(cells), std::move(boundaries)),
                        std::nullopt,
                        {}};

    if (doc.contains("scalars"))
    {
        const json& sc = doc["scalars"];
        if (!sc.is_object())
            fail(Errc::ParseError, "'scalars' must be an object");
        ScalarStructure s;
        s.beta = sc.value("beta", 1.0);
        if (!(s.beta > 0))
            fail(Errc::ParseError, "beta must be positive");
        if (sc.contains("energies"))
        {
            if (!sc["energies"].is_object())
                fail(Errc::ParseError, "'scalars.energies' must be an object");
            for (const auto& [key, block] : sc["energies"].items())
            {
                int degree = parseDegreeKey(key);
                if (degree > top)
                    fail(Errc::ParseError, "energy degree " + key + " out of range");
                std::vector<double> values(out.complex.numCells(degree), 0.0);
                if (!block.is_object())
                    fail(Errc::ParseError, "energies." + key + " must map cells to numbers");
                for (const auto& [cellName, v] : block.items())
                {
                    int idx = out.complex.cellIndex(degree, cellName);
                    if (idx < 0)
                        fail(Errc::ParseError, "unknown cell '" + cellName + "' in energies." + key);
                    if (!v.is_number())
                        fail(Errc::ParseError, "energy of '" + cellName + "' must be a number");
                    values[idx] = v.get<double>();
                }
                s.energy[degree] = std::move(values);
            }
        }
        out.scalars = std::move(s);
    }

    if (doc.contains("cycles"))
    {
        if (!doc["cycles"].is_object())
            fail(Errc::ParseError, "'cycles' must be an object");
        for (const auto& [name, block] : doc["cycles"].items())
        {
            if (!block.is_object() || !block.contains("degree") || !block.contains("coefficients"))
                fail(Errc::ParseError, "cycle '" + name + "' needs 'degree' and 'coefficients'");
            NamedCycle cycle;
            cycle.degree = block["degree"].get<int>();
            if (cycle.degree < 0 || cycle.degree > top)
                fail(Errc::ParseError, "cycle '" + name + "' has degree out of range");
            cycle.coefficients.assign(out.complex.numCells(cycle.degree), Int(0));
            for (const auto& [cellName, coeff] : block["coefficients"].items())
            {
                int idx = out.complex.cellIndex(cycle.degree, cellName);
                if (idx < 0)
                    fail(Errc::ParseError, "unknown cell '" + cellName + "' in cycle '" + name + "'");
                cycle.coefficients[idx] = parseBigInt(coeff, "cycle '" + name + "'");
            }
            out.cycles.emplace(name, std::move(cycle));
        }
    }
    return out;
}

std::string serializeComplexDocument(const ComplexDocument& doc)
{
    ordered_json out;
    if (!doc.name.empty())
        out["name"] = doc.name;

    ordered_json cells = ordered_json::object();
    for (int k = 0; k <= doc.complex.topDegree(); ++k)
        cells[std::to_string(k)] = doc.complex.cellNames(k);
    out["cells"] = std::move(cells);

    ordered_json boundary = ordered_json::object();
    for (int k = 1; k <= doc.complex.topDegree(); ++k)
    {
        IntMatrix del = doc.complex.boundary(k);
        ordered_json block = ordered_json::object();
        for (int j = 0; j < del.cols(); ++j)
        {
            ordered_json faces = ordered_json::object();
            for (int i = 0; i < del.rows(); ++i)
                if (del(i, j) != 0)
                    faces[doc.complex.cellName(k - 1, i)] = del(i, j).get_str();
            if (!faces.empty())
                block[doc.complex.cellName(k, j)] = std::move(faces);
        }
        if (!block.empty())
            boundary[std::to_string(k)] = std::move(block);
    }
    if (!boundary.empty())
        out["boundary"] = std::move(boundary);

    if (doc.scalars)
    {
        ordered_json sc;
        sc["beta"] = doc.scalars->beta;
        ordered_json energies = ordered_json::object();
        for (const auto& [degree, values] : doc.scalars->energy)
        {
            ordered_json block = ordered_json::object();
            for (size_t i = 0; i < values.size(); ++i)
                block[doc.complex.cellName(degree, static_cast<int>(i))] = values[i];
            energies[std::to_string(degree)] = std::move(block);
        }
        if (!energies.empty())
            sc["energies"] = std::move(energies);
        out["scalars"] = std::move(sc);
    }

    if (!doc.cycles.empty())
    {
        ordered_json cycles = ordered_json::object();
        for (const auto& [name, cycle] : doc.cycles)
        {
            ordered_json block;
            block["degree"] = cycle.degree;
            ordered_json coeffs = ordered_json::object();
            for (size_t i = 0; i < cycle.coefficients.size(); ++i)
                if (cycle.coefficients[i] != 0)
                    coeffs[doc.complex.cellName(cycle.degree, static_cast<int>(i))] = cycle.coefficients[i].get_str();
            block["coefficients"] = std::move(coeffs);
            cycles[name] = std::move(block);
        }
        out["cycles"] = std::move(cycles);
    }
    return out.dump(2) + "\n";
}

ComplexDocument loadComplexFile(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        fail(Errc::ParseError, "cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parseComplexDocument(buffer.str());
}

void saveComplexFile(const ComplexDocument& doc, const std::string& path)
{
    std::ofstream outFile(path);
    if (!outFile)
        fail(Errc::ParseError, "cannot write file: " + path);
    outFile << serializeComplexDocument(doc);
}

}  // namespace cohodge
