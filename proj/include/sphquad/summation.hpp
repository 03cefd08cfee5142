#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <thread>
#include <vector>

namespace sphquad {

/// Kahan-Neumaier compensated accumulator.
class KahanSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Compensated sum of term(0..n-1) with a fixed chunk decomposition combined
/// in index order, so the result is bitwise independent of the thread count.
template <class Term>
double chunked_sum(std::size_t n, const Term& term, int threads = 1) {
    constexpr std::size_t kChunk = 2048;
    const std::size_t nchunks = (n + kChunk - 1) / kChunk;
    std::vector<double> partial(nchunks, 0.0);

    auto run_chunk = [&](std::size_t c) {
        const std::size_t lo = c * kChunk;
        const std::size_t hi = std::min(n, lo + kChunk);
        KahanSum acc;
        for (std::size_t i = lo; i < hi; ++i) acc.add(term(i));
        partial[c] = acc.value();
    };

    if (threads <= 1 || nchunks <= 1) {
        for (std::size_t c = 0; c < nchunks; ++c) run_chunk(c);
    } else {
        const std::size_t nt = std::min<std::size_t>(threads, nchunks);
        std::vector<std::thread> pool;
        pool.reserve(nt);
        for (std::size_t w = 0; w < nt; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t c = w; c < nchunks; c += nt) run_chunk(c);
            });
        }
        for (auto& th : pool) th.join();
    }

    KahanSum total;
    for (double p : partial) total.add(p);
    return total.value();
}

}  // namespace sphquad
