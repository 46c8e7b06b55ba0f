// Command-line surface for the combinatorial Hodge toolkit: ingest complex
// files, enumerate forests, evaluate the co-tree splitting, verify the
// matrix-tree identities and explore the cycle-incidence process.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "cohodge/complex_io.hpp"
#include "cohodge/corpus.hpp"
#include "cohodge/error.hpp"
#include "cohodge/forests.hpp"
#include "cohodge/hodge.hpp"
#include "cohodge/matrix_tree.hpp"
#include "cohodge/numeric.hpp"
#include "cohodge/process.hpp"

using namespace cohodge;
using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

struct CommonArgs {
    std::string file;
    int degree = 1;
    double beta = -1.0;  // <0 means "use the file's beta"
    std::string mode = "auto";
    long long budget = 10'000'000;
    bool jsonOut = false;
    bool csvOut = false;
    bool serial = false;
    std::vector<std::string> energyOverrides;
};

void addCommonFlags(CLI::App* cmd, CommonArgs& args)
{
    cmd->add_option("file", args.file, "complex file (JSON)")->required();
    cmd->add_option("--degree", args.degree, "working degree d")->required();
    cmd->add_option("--beta", args.beta, "inverse temperature (overrides the file)");
    cmd->add_option("--mode", args.mode, "arithmetic mode: auto|exact|float")
        ->check(CLI::IsMember({"auto", "exact", "float"}));
    cmd->add_option("--budget", args.budget, "enumeration budget (candidate subsets)");
    cmd->add_flag("--json", args.jsonOut, "machine-readable JSON output");
    cmd->add_flag("--csv", args.csvOut, "CSV output");
    cmd->add_flag("--serial", args.serial, "force the serial enumeration path");
    cmd->add_option("--energy", args.energyOverrides,
                    "energy override, 'DEGREE:CELL=VALUE' or 'DEGREE CELL=VALUE'")
        ->take_all();
}

ArithmeticMode parseMode(const std::string& mode)
{
    if (mode == "exact")
        return ArithmeticMode::Exact;
    if (mode == "float")
        return ArithmeticMode::Float;
    return ArithmeticMode::Auto;
}

// Scalars resolution: file block if present, zeros otherwise, then flag
// overrides on top.
ScalarStructure resolveScalars(const ComplexDocument& doc, const CommonArgs& args)
{
    ScalarStructure s = doc.scalars ? *doc.scalars : ScalarStructure::zero(doc.complex);
    for (int k = 0; k <= doc.complex.topDegree(); ++k)
        if (!s.covers(k))
            s.energy[k] = std::vector<double>(doc.complex.numCells(k), 0.0);
    if (args.beta > 0)
        s.beta = args.beta;

    // Accept "DEG:CELL=VALUE" in one token or "DEG" "CELL=VALUE" in two.
    std::vector<std::pair<std::string, std::string>> entries;
    for (size_t i = 0; i < args.energyOverrides.size(); ++i)
    {
        const std::string& token = args.energyOverrides[i];
        auto colon = token.find(':');
        if (colon != std::string::npos)
            entries.emplace_back(token.substr(0, colon), token.substr(colon + 1));
        else
        {
            if (i + 1 >= args.energyOverrides.size())
                fail(Errc::ParseError, "--energy needs 'DEGREE CELL=VALUE'");
            entries.emplace_back(token, args.energyOverrides[++i]);
        }
    }
    for (const auto& [degreeText, assignment] : entries)
    {
        auto eq = assignment.find('=');
        if (eq == std::string::npos)
            fail(Errc::ParseError, "--energy assignment must look like CELL=VALUE");
        int degree = std::stoi(degreeText);
        std::string cell = assignment.substr(0, eq);
        double value = std::stod(assignment.substr(eq + 1));
        int idx = doc.complex.cellIndex(degree, cell);
        if (idx < 0)
            fail(Errc::ParseError, "unknown cell '" + cell + "' in degree " + degreeText);
        s.energy[degree][idx] = value;
    }
    return s;
}

std::string cellList(const ChainComplex& c, int degree, const std::vector<int>& cells)
{
    if (cells.empty())
        return "(empty)";
    std::string out;
    for (size_t i = 0; i < cells.size(); ++i)
    {
        if (i)
            out += "+";
        out += c.cellName(degree, cells[i]);
    }
    return out;
}

int cmdForests(const CommonArgs& args, bool trees)
{
    ComplexDocument doc = loadComplexFile(args.file);
    ScalarStructure s = resolveScalars(doc, args);
    EnumerationOptions opts;
    opts.budget = args.budget;
    opts.parallel = !args.serial;

    auto treeList = enumerateTrees(doc.complex, args.degree, opts);
    auto cotreeList = enumerateCoTrees(doc.complex, args.degree, opts);
    ForestWeights w = forestWeights(doc.complex, args.degree, treeList, cotreeList, s);

    const int cellDegree = trees ? args.degree : args.degree - 1;
    const size_t count = trees ? treeList.size() : cotreeList.size();
    auto cellsOf = [&](size_t i) { return trees ? treeList[i].cells : cotreeList[i].cells; };
    auto invariantOf = [&](size_t i) { return trees ? treeList[i].torsion : cotreeList[i].relOrder; };
    auto weightOf = [&](size_t i) { return std::exp(trees ? w.treeLog[i] : w.cotreeLog[i]); };
    const char* invariantName = trees ? "torsion" : "relative_order";

    if (args.jsonOut)
    {
        ordered_json out;
        out["complex"] = doc.name;
        out["degree"] = args.degree;
        out["kind"] = trees ? "trees" : "cotrees";
        out["count"] = count;
        out["weight_sum"] = trees ? w.treeSum : w.cotreeSum;
        ordered_json rows = ordered_json::array();
        for (size_t i = 0; i < count; ++i)
        {
            ordered_json row;
            ordered_json cells = ordered_json::array();
            for (int ci : cellsOf(i))
                cells.push_back(doc.complex.cellName(cellDegree, ci));
            row["cells"] = std::move(cells);
            row[invariantName] = invariantOf(i).get_str();
            row["weight"] = weightOf(i);
            rows.push_back(std::move(row));
        }
        out["rows"] = std::move(rows);
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (args.csvOut)
    {
        std::cout << "cells," << invariantName << ",weight\n";
        for (size_t i = 0; i < count; ++i)
            std::cout << cellList(doc.complex, cellDegree, cellsOf(i)) << "," << invariantOf(i).get_str() << ","
                      << std::setprecision(17) << weightOf(i) << "\n";
        return 0;
    }
    std::cout << (trees ? "spanning trees" : "spanning co-trees") << " of " << doc.name << " at degree "
              << args.degree << " (" << count << " total)\n";
    for (size_t i = 0; i < count; ++i)
        std::cout << "  " << cellList(doc.complex, cellDegree, cellsOf(i)) << "  " << invariantName << "="
                  << invariantOf(i).get_str() << "  weight=" << std::setprecision(12) << weightOf(i) << "\n";
    std::cout << "weight sum: " << std::setprecision(17) << (trees ? w.treeSum : w.cotreeSum) << "\n";
    return 0;
}

int cmdBoltzmann(const CommonArgs& args, const std::string& cycleName, bool withCertificate)
{
    ComplexDocument doc = loadComplexFile(args.file);
    ScalarStructure s = resolveScalars(doc, args);
    auto it = doc.cycles.find(cycleName);
    if (it == doc.cycles.end())
        fail(Errc::ParseError, "no cycle named '" + cycleName + "' in the file");
    if (it->second.degree != args.degree - 1)
        fail(Errc::WrongDimension, "cycle '" + cycleName + "' has degree " + std::to_string(it->second.degree) +
                                       ", expected " + std::to_string(args.degree - 1));

    HodgeOptions opts;
    opts.mode = parseMode(args.mode);
    opts.enumeration.budget = args.budget;
    opts.enumeration.parallel = !args.serial;

    BoltzmannDistribution rho = boltzmannDistribution(doc.complex, args.degree, s, it->second.coefficients, opts);
    SplittingOperator psi = boltzmannSplitting(doc.complex, args.degree, s, opts);

    if (args.jsonOut)
    {
        ordered_json out;
        out["complex"] = doc.name;
        out["degree"] = args.degree;
        out["cycle"] = cycleName;
        out["beta"] = s.beta;
        out["degenerate"] = rho.degenerate;
        out["exact"] = rho.cycleExact.has_value();
        ordered_json vec = ordered_json::object();
        for (int i = 0; i < doc.complex.numCells(args.degree - 1); ++i)
        {
            ordered_json entry;
            entry["value"] = rho.cycle[i];
            if (rho.cycleExact)
                entry["exact"] = (*rho.cycleExact)(i, 0).get_str();
            vec[doc.complex.cellName(args.degree - 1, i)] = std::move(entry);
        }
        out["distribution"] = std::move(vec);
        ordered_json cert = ordered_json::array();
        for (const ForestTerm& t : psi.certificate)
        {
            ordered_json row;
            ordered_json cells = ordered_json::array();
            for (int ci : t.cotreeCells)
                cells.push_back(doc.complex.cellName(args.degree - 1, ci));
            row["cotree"] = std::move(cells);
            row["relative_order"] = t.invariant.get_str();
            row["normalized_weight"] = std::exp(t.logWeight - psi.logNormalizer);
            cert.push_back(std::move(row));
        }
        out["certificate"] = std::move(cert);
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (args.csvOut)
    {
        std::cout << "cell,value\n";
        for (int i = 0; i < doc.complex.numCells(args.degree - 1); ++i)
            std::cout << doc.complex.cellName(args.degree - 1, i) << "," << std::setprecision(17) << rho.cycle[i]
                      << "\n";
        return 0;
    }
    std::cout << "Boltzmann distribution of [" << cycleName << "] on " << doc.name << " (degree " << args.degree
              << ", beta " << s.beta << (rho.cycleExact ? ", exact arithmetic" : "") << ")\n";
    if (rho.degenerate)
        std::cout << "  note: H is torsion-only in this degree; the representative is zero\n";
    for (int i = 0; i < doc.complex.numCells(args.degree - 1); ++i)
    {
        std::cout << "  " << std::setw(8) << doc.complex.cellName(args.degree - 1, i) << "  "
                  << std::setprecision(12) << rho.cycle[i];
        if (rho.cycleExact)
            std::cout << "  (= " << (*rho.cycleExact)(i, 0).get_str() << ")";
        std::cout << "\n";
    }
    std::cout << "co-tree certificate: " << psi.certificate.size() << " terms, normalizer "
              << std::exp(psi.logNormalizer) << "\n";
    if (withCertificate)
        for (const ForestTerm& t : psi.certificate)
            std::cout << "  " << cellList(doc.complex, args.degree - 1, t.cotreeCells) << "  order="
                      << t.invariant.get_str() << "  weight=" << std::exp(t.logWeight - psi.logNormalizer)
                      << "\n";
    return 0;
}

struct VerifyCheck {
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string detail;
};

int cmdVerify(const CommonArgs& args, bool injectError)
{
    ComplexDocument doc = loadComplexFile(args.file);
    ScalarStructure s = resolveScalars(doc, args);
    HodgeOptions opts;
    opts.mode = parseMode(args.mode);
    opts.enumeration.budget = args.budget;
    opts.enumeration.parallel = !args.serial;
    const int d = args.degree;
    const ChainComplex& c = doc.complex;
    DegreeContext ctx = makeDegreeContext(c, d);

    std::vector<VerifyCheck> checks;

    // 1. Matrix-tree identity.
    {
        MatrixTreeReport rep = verifyMatrixTree(c, d, s, opts);
        double forest = rep.forestValue * (injectError ? 1.01 : 1.0);
        bool pass = rep.exactMode && !injectError ? rep.exactEqual
                                                  : relativeError(rep.detValue, forest) <= 1e-9;
        std::ostringstream detail;
        detail << "det=" << std::setprecision(12) << rep.detValue << " forests=" << forest << " ("
               << rep.cotreeCount << " co-trees, " << rep.treeCount << " trees"
               << (rep.exactMode ? ", exact" : "") << ")";
        checks.push_back({"matrix-tree identity", pass, false, detail.str()});
    }
    // 2. Primal and dual Laplacian determinants.
    {
        BiasedLaplacian lap = biasedLaplacian(c, d, s, opts.mode);
        bool pass = lap.exactDet ? *lap.exactDet == *lap.exactDualDet
                                 : relativeError(lap.det, lap.dualDet) <= 1e-10;
        checks.push_back({"laplacian dual determinant", pass, false,
                          "det=" + std::to_string(lap.det) + " dual=" + std::to_string(lap.dualDet)});
    }
    // 3. Tree-co-tree duality.
    {
        DualityReport rep = dualize(c, d, opts.enumeration);
        checks.push_back({"tree-co-tree duality", rep.bijective && rep.invariantsMatch, false,
                          std::to_string(rep.trees.size()) + " trees <-> " +
                              std::to_string(rep.dualCoTrees.size()) + " dual co-trees"});
    }
    // 4-6. Oracle equivalences for the three summation operators.
    {
        Eigen::VectorXd muW(ctx.nCellsD), muE(ctx.nCellsDm1);
        {
            std::vector<double> raw = modifiedInnerProduct(c, s, d);
            for (int i = 0; i < ctx.nCellsD; ++i)
                muW(i) = raw[i];
            raw = modifiedInnerProduct(c, s, d - 1);
            for (int i = 0; i < ctx.nCellsDm1; ++i)
                muE(i) = raw[i];
        }
        SplittingOperator p = kirchhoffProjection(c, d, s, opts);
        SplittingOperator iPlusOp = cotreeProjection(c, d, s, opts);
        SplittingOperator dPlus = kirchhoffBoltzmann(c, d, s, opts);
        double errP = 0.0, errI = 0.0, errD = 0.0, errMp = 0.0;
        if (ctx.rankB > 0)
        {
            // Exact-rational normal-equation oracles (the double weights
            // convert to rationals exactly).
            std::vector<Rat> muWExact(ctx.nCellsD), muEExact(ctx.nCellsDm1);
            for (int i = 0; i < ctx.nCellsD; ++i)
                muWExact[i] = Rat(muW(i));
            for (int i = 0; i < ctx.nCellsDm1; ++i)
                muEExact[i] = Rat(muE(i));
            Eigen::MatrixXd pOracle =
                toEigen(mpPseudoInverseOracleExact(RatMatrix::fromInt(ctx.coordsP), muWExact, {}));
            Eigen::MatrixXd iOracle =
                toEigen(mpPseudoInverseOracleExact(RatMatrix::fromInt(ctx.imageBasisG), {}, muEExact));
            errP = relativeMatrixError(p.matrix, pOracle);
            errI = relativeMatrixError(iPlusOp.matrix, iOracle);
            errD = relativeMatrixError(dPlus.matrix, pOracle * iOracle);
        }
        Eigen::MatrixXd del = toEigen(ctx.del);
        if (del.size() > 0)
        {
            double e1 = relativeMatrixError(del * dPlus.matrix * del, del);
            double e2 = relativeMatrixError(dPlus.matrix * del * dPlus.matrix, dPlus.matrix);
            errMp = std::max(e1, e2);
        }
        checks.push_back({"projection oracle (trees)", errP <= 1e-10, false,
                          "relative error " + std::to_string(errP)});
        checks.push_back({"projection oracle (co-trees)", errI <= 1e-10, false,
                          "relative error " + std::to_string(errI)});
        checks.push_back({"boundary pseudo-inverse oracle", errD <= 1e-10 && errMp <= 1e-10, false,
                          "composition " + std::to_string(errD) + ", defining identities " +
                              std::to_string(errMp)});
    }
    // 7. Hodge splitting postconditions.
    {
        SplittingOperator psi = boltzmannSplitting(c, d, s, opts);
        Eigen::MatrixXd freeMap = toEigen(ctx.freeMapF);
        const int h = ctx.homologyRank();
        double errId = h == 0 ? 0.0
                              : relativeMatrixError(freeMap * psi.matrix, Eigen::MatrixXd::Identity(h, h));
        Eigen::VectorXd muE(ctx.nCellsDm1);
        std::vector<double> raw = modifiedInnerProduct(c, s, d - 1);
        for (int i = 0; i < ctx.nCellsDm1; ++i)
            muE(i) = raw[i];
        Eigen::MatrixXd orth = toEigen(ctx.del).transpose() * muE.asDiagonal() * psi.matrix;
        double errOrth = maxAbs(orth) / std::max(1.0, maxAbs(psi.matrix));
        checks.push_back({"splitting postconditions", errId <= 1e-10 && errOrth <= 1e-10, false,
                          "projection " + std::to_string(errId) + ", co-closedness " + std::to_string(errOrth)});
    }
    // 8. Two-stage tree-complex identities (when applicable).
    {
        VerifyCheck check;
        check.name = "tree-complex identity suite";
        if (rationalRank(ctx.del) == ctx.nCellsD && s.isZeroOn({d - 1, d}))
        {
            LemmaFinalReport rep = verifyLemmaFinal(c, d, opts.enumeration);
            check.pass = rep.pass;
            check.detail = "det=" + rep.detL.get_str() + " covolume^2=" + rep.covolumeSq.get_str();
        }
        else
        {
            check.skipped = true;
            check.pass = true;
            check.detail = "not a tree complex at zero energies";
        }
        checks.push_back(std::move(check));
    }

    bool allPass = true;
    for (const VerifyCheck& check : checks)
        allPass = allPass && check.pass;

    if (args.jsonOut)
    {
        ordered_json out;
        out["complex"] = doc.name;
        out["degree"] = d;
        out["pass"] = allPass;
        ordered_json rows = ordered_json::array();
        for (const VerifyCheck& check : checks)
        {
            ordered_json row;
            row["name"] = check.name;
            row["pass"] = check.pass;
            row["skipped"] = check.skipped;
            row["detail"] = check.detail;
            rows.push_back(std::move(row));
        }
        out["checks"] = std::move(rows);
        std::cout << out.dump(2) << "\n";
    }
    else
    {
        std::cout << "verification of " << doc.name << " at degree " << d << "\n";
        for (const VerifyCheck& check : checks)
            std::cout << "  " << (check.skipped ? "SKIP" : check.pass ? "PASS" : "FAIL") << "  " << check.name
                      << "  (" << check.detail << ")\n";
        std::cout << (allPass ? "all checks passed" : "verification FAILED") << "\n";
    }
    return allPass ? 0 : 1;
}

int cmdExplore(const CommonArgs& args, const std::string& cycleName, int maxVertices, int maxDepth,
               bool legacyRates)
{
    ComplexDocument doc = loadComplexFile(args.file);
    ScalarStructure s = resolveScalars(doc, args);
    auto it = doc.cycles.find(cycleName);
    if (it == doc.cycles.end())
        fail(Errc::ParseError, "no cycle named '" + cycleName + "' in the file");

    RateConvention convention = legacyRates ? RateConvention::Swapped : RateConvention::Unified;
    CycleGraph graph = explore(doc.complex, args.degree, s, it->second.coefficients, maxVertices, maxDepth,
                               convention);

    ordered_json out;
    out["complex"] = doc.name;
    out["degree"] = args.degree;
    out["cycle"] = cycleName;
    out["vertex_count"] = graph.vertices.size();
    out["edge_count"] = graph.edges.size();
    out["truncated_by_cap"] = graph.truncatedByCap;
    ordered_json vertices = ordered_json::array();
    const int nd1 = doc.complex.numCells(args.degree - 1);
    for (size_t v = 0; v < graph.vertices.size(); ++v)
    {
        ordered_json row;
        row["id"] = v;
        row["depth"] = graph.vertices[v].depth;
        ordered_json chain = ordered_json::object();
        for (int i = 0; i < nd1; ++i)
            if (graph.vertices[v].chain[i] != 0)
                chain[doc.complex.cellName(args.degree - 1, i)] = graph.vertices[v].chain[i].get_str();
        row["cycle"] = std::move(chain);
        vertices.push_back(std::move(row));
    }
    out["vertices"] = std::move(vertices);
    ordered_json edges = ordered_json::array();
    for (const CycleEdge& e : graph.edges)
    {
        ordered_json row;
        row["from"] = e.from;
        row["to"] = e.to;
        row["face_cell"] = doc.complex.cellName(args.degree - 1, e.faceCell);
        row["cell"] = doc.complex.cellName(args.degree, e.cell);
        row["rate"] = e.rate;
        edges.push_back(std::move(row));
    }
    out["edges"] = std::move(edges);

    if (args.degree == 1)
    {
        StationaryReport rep = compareStationaryD1(doc.complex, s);
        ordered_json stat;
        stat["max_abs_difference"] = rep.maxAbsDifference;
        stat["matches_boltzmann"] = rep.pass;
        out["stationary_comparison"] = std::move(stat);
    }

    if (args.jsonOut)
        std::cout << out.dump(2) << "\n";
    else
    {
        std::cout << "explored " << graph.vertices.size() << " cycles, " << graph.edges.size()
                  << " transitions (cap " << (graph.truncatedByCap ? "hit" : "not hit") << ")\n";
        if (args.degree == 1 && out.contains("stationary_comparison"))
            std::cout << "stationary vs Boltzmann max difference: "
                      << out["stationary_comparison"]["max_abs_difference"].get<double>() << "\n";
    }
    return 0;
}

int cmdGenCorpus(const std::string& directory)
{
    for (const ComplexDocument& doc : corpus::all())
    {
        std::string path = directory + "/" + doc.name + ".json";
        saveComplexFile(doc, path);
        std::cout << "wrote " << path << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"combinatorial Hodge toolkit: spanning forests, co-tree splittings and matrix-tree checks"};
    app.require_subcommand(1);

    CommonArgs treesArgs, cotreesArgs, boltzmannArgs, verifyArgs, exploreArgs;
    std::string cycleName, exploreCycle, corpusDir = ".";
    bool withCertificate = false, injectError = false, legacyRates = false;
    int maxVertices = 1000, maxDepth = 50;

    CLI::App* trees = app.add_subcommand("trees", "enumerate spanning trees with torsion and weight");
    addCommonFlags(trees, treesArgs);

    CLI::App* cotrees = app.add_subcommand("cotrees", "enumerate spanning co-trees with order and weight");
    addCommonFlags(cotrees, cotreesArgs);

    CLI::App* boltzmann = app.add_subcommand("boltzmann", "co-tree splitting representative of a cycle class");
    addCommonFlags(boltzmann, boltzmannArgs);
    boltzmann->add_option("--cycle", cycleName, "named cycle from the file")->required();
    boltzmann->add_flag("--certificate", withCertificate, "include the per-co-tree certificate");

    CLI::App* verify = app.add_subcommand("verify", "run the identity and oracle checks; exit 0 iff all pass");
    addCommonFlags(verify, verifyArgs);
    verify->add_flag("--inject-weight-error", injectError)->group("");  // hidden negative control

    CLI::App* exploreCmd = app.add_subcommand("explore", "breadth-first exploration of the cycle-incidence graph");
    addCommonFlags(exploreCmd, exploreArgs);
    exploreCmd->add_option("--cycle", exploreCycle, "named cycle from the file")->required();
    exploreCmd->add_option("--max-vertices", maxVertices, "vertex cap");
    exploreCmd->add_option("--max-depth", maxDepth, "jump-depth cap");
    exploreCmd->add_flag("--legacy-d1-rates", legacyRates,
                         "swap which scalar map drives which degree in the rates");

    CLI::App* gen = app.add_subcommand("gen-corpus", "write the bundled example complexes to a directory");
    gen->add_option("directory", corpusDir, "output directory");

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (trees->parsed())
            return cmdForests(treesArgs, true);
        if (cotrees->parsed())
            return cmdForests(cotreesArgs, false);
        if (boltzmann->parsed())
            return cmdBoltzmann(boltzmannArgs, cycleName, withCertificate);
        if (verify->parsed())
            return cmdVerify(verifyArgs, injectError);
        if (exploreCmd->parsed())
            return cmdExplore(exploreArgs, exploreCycle, maxVertices, maxDepth, legacyRates);
        if (gen->parsed())
            return cmdGenCorpus(corpusDir);
    }
    catch (const Error& e)
    {
        json out;
        out["error"] = errcName(e.code());
        out["message"] = e.what();
        std::cout << out.dump(2) << "\n";
        return 2;
    }
    catch (const std::exception& e)
    {
        json out;
        out["error"] = "Internal";
        out["message"] = e.what();
        std::cout << out.dump(2) << "\n";
        return 2;
    }
    return 0;
}
