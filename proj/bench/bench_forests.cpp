// Benchmark: serial reference enumeration vs the pruned OpenMP kernels, and
// operator assembly on top of them.  Run manually; not part of ctest.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cohodge/forests.hpp"
#include "cohodge/generators.hpp"
#include "cohodge/hodge.hpp"

using namespace cohodge;

namespace {

double seconds(const std::chrono::steady_clock::time_point& start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <typename F>
double timeIt(F&& fn)
{
    auto start = std::chrono::steady_clock::now();
    fn();
    return seconds(start);
}

}  // namespace

int main()
{
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled (serial build)\n");
#endif

    SeededRng rng(4242);
    struct Case {
        const char* name;
        int rows, cols;
    };
    const Case cases[] = {{"6x12", 6, 12}, {"7x14", 7, 14}, {"8x16", 8, 16}};

    EnumerationOptions serial{.budget = 1'000'000'000, .parallel = false};
    EnumerationOptions parallel{.budget = 1'000'000'000, .parallel = true};

    std::printf("%-8s %12s %12s %12s %12s %10s\n", "case", "trees", "ref (s)", "pruned-1t", "pruned-omp",
                "speedup");
    for (const Case& b : cases)
    {
        IntMatrix m = randomIntMatrix(rng, b.rows, b.cols, -1, 1);
        ChainComplex c = twoStageComplex(m);
        DegreeContext ctx = makeDegreeContext(c, 1);

        size_t count = 0;
        double tRef = timeIt([&] { count = enumerateTreesReference(ctx, serial).size(); });
        double tSerial = timeIt([&] { (void)enumerateTrees(ctx, serial).size(); });
        double tParallel = timeIt([&] { (void)enumerateTrees(ctx, parallel).size(); });
        std::printf("%-8s %12zu %12.3f %12.3f %12.3f %9.2fx\n", b.name, count, tRef, tSerial, tParallel,
                    tSerial / tParallel);
    }

    // Operator assembly over the enumerated forests (per-forest exact solves).
    {
        IntMatrix m = randomIntMatrix(rng, 6, 12, -1, 1);
        ChainComplex c = twoStageComplex(m);
        ScalarStructure s = randomScalars(rng, c, 1.0, -1.0, 1.0);
        HodgeOptions serialOpts, parallelOpts;
        serialOpts.enumeration = serial;
        serialOpts.keepCertificate = false;
        parallelOpts.enumeration = parallel;
        parallelOpts.keepCertificate = false;

        double tSerial = timeIt([&] { (void)kirchhoffProjection(c, 1, s, serialOpts); });
        double tParallel = timeIt([&] { (void)kirchhoffProjection(c, 1, s, parallelOpts); });
        std::printf("%-8s %12s %12.3f %12.3f %12s %9.2fx\n", "assembly", "-", tSerial, tParallel, "-",
                    tSerial / tParallel);
    }
    return 0;
}
