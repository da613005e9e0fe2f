#include "fta/certify.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "fta/complex.hpp"
#include "fta/estermann.hpp"
#include "fta/random.hpp"

namespace fta {

NormCheckReport run_norm_checks(std::size_t samples, std::uint64_t seed, NormMutation mutation) {
    NormCheckReport report;
    report.samples = samples;
    SplitMix64 rng(seed);
    const Rational shrink(49, 100);

    for (std::size_t i = 0; i < samples; ++i) {
        Complex<Rational> z = i == 0 ? Complex<Rational>() : random_complex_rational(rng);
        Complex<Rational> w = random_complex_rational(rng);

        auto v = check_norm_product(z, w);
        if (mutation == NormMutation::shrink_product) {
            v.product = v.upper * shrink;
            v.lower_holds = !(v.product < v.lower);
            v.upper_holds = !(v.upper < v.product);
        }
        if (v.holds()) continue;
        report.lower_failures += v.lower_holds ? 0 : 1;
        report.upper_failures += v.upper_holds ? 0 : 1;
        report.conjugate_failures += v.conjugate_holds ? 0 : 1;
        if (report.first_failures.size() < 5) {
            std::ostringstream os;
            os << "sample " << i << ": z=" << z << " w=" << w << " lower=" << to_string(v.lower)
               << " |zw|=" << to_string(v.product) << " upper=" << to_string(v.upper);
            report.first_failures.push_back(os.str());
        }
    }
    return report;
}

LemmaSweepReport run_lemma_sweep(unsigned max_k, unsigned threads) {
    LemmaSweepReport report;
    if (max_k < 2) return report;
    std::vector<unsigned> ks;
    for (unsigned k = 2; k <= max_k; k += 2) ks.push_back(k);

    const BinomialTable table(2 * ks.back());
    std::vector<std::string> lines(ks.size());
    std::vector<char> ok(ks.size(), 0);

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(ks.size()));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < ks.size(); i = next++) {
            const auto direct = verify_lemma_direct(ks[i]);
            const auto termwise = verify_lemma_termwise(ks[i], table);
            lines[i] = lemma_report_line(direct, termwise);
            ok[i] = direct.holds() && termwise.holds();
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    pool.clear();

    report.lines = std::move(lines);
    report.all_passed = std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
    return report;
}

}  // namespace fta
