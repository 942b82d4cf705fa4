#include "nevpick/sampling.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace nevpick {

std::vector<cplx> make_grid(const GridConfig& cfg, double lo, double hi) {
    if (!cfg.explicit_points.empty()) return cfg.explicit_points;
    std::vector<cplx> pts;
    const double a = lo - cfg.margin, b = hi + cfg.margin;
    const std::size_t m = cfg.points_per_line;
    for (double im : cfg.imag_lines)
        for (std::size_t k = 0; k < m; ++k) {
            const double t = m == 1 ? 0.5 : static_cast<double>(k) / static_cast<double>(m - 1);
            pts.emplace_back(a + t * (b - a), im);
        }
    return pts;
}

namespace {

std::vector<cplx> section(const SampledKernel& k, const std::vector<std::size_t>& pts) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < k.fixed; ++i) idx.push_back(i);
    for (std::size_t p : pts)
        for (std::size_t b = 0; b < k.block; ++b) idx.push_back(k.fixed + p * k.block + b);
    std::vector<cplx> out(idx.size() * idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) out[i * idx.size() + j] = k.at(idx[i], idx[j]);
    return out;
}

}  // namespace

SectionResult max_section_negatives(const SampledKernel& k, const GridConfig& cfg) {
    SectionResult res;
    const std::size_t m = k.points;
    res.full = sampled_inertia(k.data, k.order(), cfg.eig_tol);
    std::vector<std::size_t> all(m);
    std::iota(all.begin(), all.end(), 0);
    res.max_negatives = res.full.negatives;
    res.witness = all;
    res.sections = 1;

    auto consider = [&](const std::vector<std::size_t>& pts) {
        const auto sec = section(k, pts);
        const auto in = sampled_inertia(sec, k.fixed + k.block * pts.size(), cfg.eig_tol);
        ++res.sections;
        if (in.negatives > res.max_negatives) {
            res.max_negatives = in.negatives;
            res.witness = pts;
        }
    };

    if (m <= cfg.exhaustive_limit) {
        const std::size_t total = std::size_t{1} << m;
        for (std::size_t mask = 1; mask + 1 < total; ++mask) {
            std::vector<std::size_t> pts;
            for (std::size_t b = 0; b < m; ++b)
                if (mask & (std::size_t{1} << b)) pts.push_back(b);
            consider(pts);
        }
        if (k.fixed > 0) consider({});
    } else {
        std::mt19937_64 rng(cfg.seed);
        for (std::size_t s = 0; s < cfg.random_sections; ++s) {
            std::uniform_int_distribution<std::size_t> size_dist(1, m);
            const std::size_t size = size_dist(rng);
            std::vector<std::size_t> pts;
            std::sample(all.begin(), all.end(), std::back_inserter(pts), size, rng);
            consider(pts);
        }
    }
    return res;
}

double hermitian_defect(const SampledKernel& k) {
    double scale = 0.0, defect = 0.0;
    for (const auto& v : k.data) scale = std::max(scale, std::abs(v));
    for (std::size_t i = 0; i < k.order(); ++i)
        for (std::size_t j = i; j < k.order(); ++j) defect = std::max(defect, std::abs(k.at(i, j) - std::conj(k.at(j, i))));
    return defect / std::max(1.0, scale);
}

}  // namespace nevpick
