#include "signum/spectra.hpp"

#include "signum/error.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <thread>

namespace signum {

void check_config(const SampleConfig& cfg) {
    if (!(cfg.lo > 0.0) || !(cfg.hi >= cfg.lo))
        throw SignumError(ErrorKind::InvalidArgument, "magnitude range needs 0 < lo <= hi");
    if (cfg.trials < 1) throw SignumError(ErrorKind::InvalidArgument, "trials must be at least 1");
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Eigen::MatrixXd sample(const SignPattern& p, const SampleConfig& cfg, std::uint64_t trial) {
    const int n = p.order();
    std::mt19937_64 rng(splitmix64(cfg.seed + trial));
    const bool near_one =
        cfg.law == MagnitudeLaw::NearOne || (cfg.law == MagnitudeLaw::Mixed && trial % 2 == 1);
    const double lo = near_one ? 0.5 : cfg.lo;
    const double hi = near_one ? 2.0 : cfg.hi;
    std::uniform_real_distribution<double> exponent(std::log(lo), std::log(hi));
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p.nonzero(i, j)) a(i, j) = to_int(p(i, j)) * std::exp(exponent(rng));
    return a;
}

std::string to_string(const Inertia& in) {
    return "(" + std::to_string(in.pos) + "," + std::to_string(in.neg) + "," + std::to_string(in.zero) + ")";
}

std::string to_string(const RefinedInertia& in) {
    return "(" + std::to_string(in.pos) + "," + std::to_string(in.neg) + "," + std::to_string(in.zero_eigs) + "," +
           std::to_string(in.imag) + ")";
}

std::string to_string(const Frequency& f) {
    return "(" + std::to_string(f.real) + "," + std::to_string(f.nonreal) + ")";
}

double default_tolerance(const Eigen::MatrixXd& a) { return 1e-8 * (1.0 + a.norm()); }

SpectralProfile classify_eigenvalues(std::vector<std::complex<double>> eigs, double tol) {
    SpectralProfile out;
    out.tol = tol;
    auto fragile = [tol](double v) { return std::abs(v) > tol && std::abs(v) <= 10.0 * tol; };
    auto near = [tol](double v) { return std::abs(v) > 1e-4 * tol && std::abs(v) <= tol; };
    for (const auto& z : eigs) {
        const double re = z.real(), im = z.imag();
        if (fragile(re) || fragile(im)) out.borderline = true;
        if (near(re) || near(im)) out.near_axis = true;
        const bool zero_re = std::abs(re) <= tol;
        const bool zero_im = std::abs(im) <= tol;
        if (zero_re) {
            ++out.inertia.zero;
            if (zero_im) ++out.refined.zero_eigs;
            else ++out.refined.imag;
        } else if (re > 0) {
            ++out.inertia.pos;
            ++out.refined.pos;
        } else {
            ++out.inertia.neg;
            ++out.refined.neg;
        }
        if (zero_im) ++out.frequency.real;
        else ++out.frequency.nonreal;
    }
    std::sort(eigs.begin(), eigs.end(), [](const auto& x, const auto& y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    out.eigenvalues = std::move(eigs);
    return out;
}

SpectralProfile spectral_profile(const Eigen::MatrixXd& a, std::optional<double> tol) {
    if (a.rows() != a.cols()) throw SignumError(ErrorKind::DimensionMismatch, "matrix is not square");
    if (!a.allFinite()) throw SignumError(ErrorKind::NonFinite, "matrix has non-finite entries");
    const double t = tol.value_or(default_tolerance(a));
    if (!(t > 0.0)) throw SignumError(ErrorKind::InvalidArgument, "tolerance must be positive");
    if (a.rows() == 0) return classify_eigenvalues({}, t);
    Eigen::EigenSolver<Eigen::MatrixXd> solver(a, false);
    if (solver.info() != Eigen::Success) throw SignumError(ErrorKind::EigenFailure, "eigensolver did not converge");
    const auto& ev = solver.eigenvalues();
    std::vector<std::complex<double>> eigs(ev.data(), ev.data() + ev.size());
    return classify_eigenvalues(std::move(eigs), t);
}

bool axis_verified(const Eigen::MatrixXd& a, const SpectralProfile& s) {
    using LMat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
    if (a.rows() == 0) return true;
    Eigen::EigenSolver<LMat> solver(a.cast<long double>(), false);
    if (solver.info() != Eigen::Success) return false;
    const long double bound = 1e-15L * (1.0L + static_cast<long double>(a.norm()));
    const long double tol = s.tol;
    Inertia in;
    for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
        const auto z = solver.eigenvalues()[k];
        const long double re = std::abs(z.real());
        if (re <= tol && re > bound) return false;
        if (re <= tol) ++in.zero;
        else if (z.real() > 0) ++in.pos;
        else ++in.neg;
    }
    return in == s.inertia;
}

std::vector<int> Census::clean_zero_counts() const {
    std::set<int> zs;
    for (const auto& [in, entry] : inertias)
        if (entry.clean > 0) zs.insert(in.zero);
    return {zs.begin(), zs.end()};
}

void merge_into(Census& into, const Census& part) {
    for (const auto& [in, entry] : part.inertias) {
        auto [it, fresh] = into.inertias.try_emplace(in, entry);
        if (!fresh) {
            // Chunks merge in trial order, so the first clean sample wins.
            if (it->second.clean == 0 && entry.clean > 0) it->second.representative = entry.representative;
            it->second.count += entry.count;
            it->second.clean += entry.clean;
        }
    }
    for (const auto& [f, c] : part.frequencies) into.frequencies[f] += c;
    into.trials += part.trials;
    into.skipped += part.skipped;
    into.borderline += part.borderline;
}

namespace {

Census census_range(const SignPattern& p, const SampleConfig& cfg, int begin, int end) {
    Census c;
    for (int t = begin; t < end; ++t) {
        ++c.trials;
        const Eigen::MatrixXd a = sample(p, cfg, static_cast<std::uint64_t>(t));
        SpectralProfile prof;
        try {
            prof = spectral_profile(a);
        } catch (const SignumError&) {
            ++c.skipped;
            continue;
        }
        auto [it, fresh] = c.inertias.try_emplace(prof.inertia);
        // Representative: first clean sample, else the first sample.
        if (fresh || (it->second.clean == 0 && prof.clean())) it->second.representative = a;
        ++it->second.count;
        if (prof.borderline) ++c.borderline;
        if (prof.clean()) ++it->second.clean;
        ++c.frequencies[prof.frequency];
    }
    return c;
}

}  // namespace

Census census(const SignPattern& p, const SampleConfig& cfg) {
    check_config(cfg);
    const int workers = std::clamp(cfg.threads, 1, std::max(1, cfg.trials));
    if (workers == 1) return census_range(p, cfg, 0, cfg.trials);

    // Contiguous chunks merged in trial order keep representatives stable.
    std::vector<Census> parts(workers);
    {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w) {
            const int begin = static_cast<int>(static_cast<long long>(cfg.trials) * w / workers);
            const int end = static_cast<int>(static_cast<long long>(cfg.trials) * (w + 1) / workers);
            pool.emplace_back([&, w, begin, end] { parts[w] = census_range(p, cfg, begin, end); });
        }
    }
    Census out;
    for (const auto& part : parts) merge_into(out, part);
    return out;
}

bool in_class(const SignPattern& p, const Eigen::MatrixXd& a) {
    if (a.rows() != p.order() || a.cols() != p.order()) return false;
    for (int i = 0; i < p.order(); ++i)
        for (int j = 0; j < p.order(); ++j)
            if (sign_of(a(i, j)) != p(i, j)) return false;
    return true;
}

}  // namespace signum
