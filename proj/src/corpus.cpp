#include "cohodge/corpus.hpp"

#include <algorithm>
#include <cmath>

#include "cohodge/generators.hpp"

namespace cohodge::corpus {

namespace {

NamedCycle vertexClass(const ChainComplex& c, const std::string& name)
{
    NamedCycle cycle;
    cycle.degree = 0;
    cycle.coefficients.assign(c.numCells(0), Int(0));
    cycle.coefficients[c.cellIndex(0, name)] = 1;
    return cycle;
}

}  // namespace

ComplexDocument twoVertexEdge()
{
    ChainComplex c({{"v0", "v1"}, {"e"}}, {IntMatrix{{-1}, {1}}});
    ScalarStructure s;
    s.beta = 1.0;
    s.energy[0] = {0.0, std::log(2.0)};
    s.energy[1] = {0.0};
    ComplexDocument doc{"two_vertex_edge", std::move(c), std::move(s), {}};
    doc.cycles.emplace("basepoint", vertexClass(doc.complex, "v0"));
    return doc;
}

ComplexDocument thetaGraph()
{
    ChainComplex c({{"v0", "v1"}, {"e1", "e2", "e3"}}, {IntMatrix{{-1, -1, -1}, {1, 1, 1}}});
    ComplexDocument doc{"theta", std::move(c), std::nullopt, {}};
    doc.cycles.emplace("basepoint", vertexClass(doc.complex, "v0"));
    return doc;
}

ComplexDocument circleGraph()
{
    ChainComplex c({{"v"}, {"a"}}, {IntMatrix(1, 1)});
    ComplexDocument doc{"circle", std::move(c), std::nullopt, {}};
    doc.cycles.emplace("basepoint", vertexClass(doc.complex, "v"));
    NamedCycle loop;
    loop.degree = 1;
    loop.coefficients = {Int(1)};
    doc.cycles.emplace("loop", std::move(loop));
    return doc;
}

ComplexDocument k4Graph()
{
    std::vector<std::string> vertices{"v0", "v1", "v2", "v3"};
    std::vector<std::string> edges;
    IntMatrix del(4, 6);
    int col = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
        {
            edges.push_back("e" + std::to_string(i) + std::to_string(j));
            del(i, col) = -1;
            del(j, col) = 1;
            ++col;
        }
    ChainComplex c({std::move(vertices), std::move(edges)}, {del});
    ComplexDocument doc{"k4", std::move(c), std::nullopt, {}};
    doc.cycles.emplace("basepoint", vertexClass(doc.complex, "v0"));
    return doc;
}

ComplexDocument torus()
{
    std::vector<std::string> vertices{"v00", "v10", "v01", "v11"};
    // h{x}{y}: v{x,y} -> v{x+1,y};  u{x}{y}: v{x,y} -> v{x,y+1}  (mod 2)
    std::vector<std::string> edges{"h00", "h10", "h01", "h11", "u00", "u01", "u10", "u11"};
    std::vector<std::string> faces{"e1", "e2", "e3", "e4"};

    auto v = [&](const std::string& n) { return int(std::find(vertices.begin(), vertices.end(), n) - vertices.begin()); };
    auto e = [&](const std::string& n) { return int(std::find(edges.begin(), edges.end(), n) - edges.begin()); };

    IntMatrix d1(4, 8);
    auto edge = [&](const std::string& name, const std::string& from, const std::string& to) {
        d1(v(from), e(name)) = -1;
        d1(v(to), e(name)) += 1;  // += so a would-be loop cancels to zero
    };
    edge("h00", "v00", "v10");
    edge("h10", "v10", "v00");
    edge("h01", "v01", "v11");
    edge("h11", "v11", "v01");
    edge("u00", "v00", "v01");
    edge("u01", "v01", "v00");
    edge("u10", "v10", "v11");
    edge("u11", "v11", "v10");

    IntMatrix d2(8, 4);
    auto face = [&](int col, const std::string& a, int ca, const std::string& b, int cb, const std::string& cc, int ccc,
                    const std::string& dd, int cd) {
        d2(e(a), col) = ca;
        d2(e(b), col) = cb;
        d2(e(cc), col) = ccc;
        d2(e(dd), col) = cd;
    };
    // e1, e3 counterclockwise; e2, e4 clockwise.
    face(0, "h01", 1, "u11", 1, "h00", -1, "u01", -1);
    face(1, "h10", 1, "u11", 1, "h11", -1, "u01", -1);
    face(2, "h00", 1, "u10", 1, "h01", -1, "u00", -1);
    face(3, "h11", 1, "u10", 1, "h10", -1, "u00", -1);

    ChainComplex c({std::move(vertices), edges, std::move(faces)}, {d1, d2});
    ComplexDocument doc{"torus", std::move(c), std::nullopt, {}};

    NamedCycle meridian;
    meridian.degree = 1;
    meridian.coefficients.assign(8, Int(0));
    meridian.coefficients[e("u00")] = 1;
    meridian.coefficients[e("u01")] = 1;
    doc.cycles.emplace("meridian", std::move(meridian));

    NamedCycle longitude;
    longitude.degree = 1;
    longitude.coefficients.assign(8, Int(0));
    longitude.coefficients[e("h00")] = 1;
    longitude.coefficients[e("h10")] = 1;
    doc.cycles.emplace("longitude", std::move(longitude));
    return doc;
}

ComplexDocument mooreMod2()
{
    ChainComplex c({{"v"}, {"e"}}, {IntMatrix{{2}}});
    ComplexDocument doc{"moore_mod2", std::move(c), std::nullopt, {}};
    doc.cycles.emplace("generator", vertexClass(doc.complex, "v"));
    return doc;
}

ComplexDocument randomThreeComplex(unsigned long seed, const char* name)
{
    SeededRng rng(seed);
    ChainComplex c = randomComplex(rng, {3, 5, 4, 3}, 2);
    return ComplexDocument{name, std::move(c), std::nullopt, {}};
}

std::vector<ComplexDocument> all()
{
    std::vector<ComplexDocument> docs;
    docs.push_back(twoVertexEdge());
    docs.push_back(thetaGraph());
    docs.push_back(circleGraph());
    docs.push_back(k4Graph());
    docs.push_back(torus());
    docs.push_back(mooreMod2());
    docs.push_back(randomThreeComplex(814001, "random3a"));
    docs.push_back(randomThreeComplex(814002, "random3b"));
    return docs;
}

}  // namespace cohodge::corpus
