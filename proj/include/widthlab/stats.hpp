#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace widthlab {

/// Regularized upper incomplete gamma Q(a, x): series below a+1, Lentz
/// continued fraction above.
inline double gamma_q(double a, double x) {
    if (!(a > 0.0) || x < 0.0) throw std::domain_error("gamma_q: need a > 0, x >= 0");
    if (x == 0.0) return 1.0;
    const double log_prefix = -x + a * std::log(x) - std::lgamma(a);
    if (x < a + 1.0) {
        double ap = a;
        double sum = 1.0 / a;
        double del = sum;
        for (int i = 0; i < 1000; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::fabs(del) < std::fabs(sum) * 1e-16) break;
        }
        const double p = sum * std::exp(log_prefix);
        return p >= 1.0 ? 0.0 : 1.0 - p;
    }
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 1000; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16) break;
    }
    return std::exp(log_prefix) * h;
}

/// Upper-tail p-value of a chi-square statistic.
inline double chi_square_pvalue(double statistic, double dof) {
    if (dof <= 0.0) return 1.0;
    return gamma_q(dof / 2.0, statistic / 2.0);
}

struct ChiSquare {
    double statistic = 0.0;
    std::size_t dof = 0;
    double p_value = 1.0;
};

/// Two-sample homogeneity test on pre-binned counts (bins in a canonical
/// order). Adjacent bins are pooled until each pooled bin's expected count
/// reaches min_expected in both samples.
inline ChiSquare two_sample_chi_square(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& bins,
                                       double min_expected = 5.0) {
    double total_r = 0.0, total_s = 0.0;
    for (const auto& [r, s] : bins) {
        total_r += static_cast<double>(r);
        total_s += static_cast<double>(s);
    }
    if (total_r == 0.0 || total_s == 0.0) throw std::invalid_argument("two_sample_chi_square: empty sample");
    const double total = total_r + total_s;
    const double share_r = total_r / total;
    const double share_s = total_s / total;

    std::vector<std::pair<double, double>> pooled;
    double acc_r = 0.0, acc_s = 0.0;
    for (const auto& [r, s] : bins) {
        acc_r += static_cast<double>(r);
        acc_s += static_cast<double>(s);
        const double combined = acc_r + acc_s;
        if (combined * share_r >= min_expected && combined * share_s >= min_expected) {
            pooled.emplace_back(acc_r, acc_s);
            acc_r = acc_s = 0.0;
        }
    }
    if (acc_r + acc_s > 0.0) {
        if (!pooled.empty()) {
            pooled.back().first += acc_r;
            pooled.back().second += acc_s;
        } else {
            pooled.emplace_back(acc_r, acc_s);
        }
    }

    ChiSquare out;
    if (pooled.size() < 2) {
        out.dof = 0;
        out.p_value = 1.0;
        return out;
    }
    const double k1 = std::sqrt(total_s / total_r);
    const double k2 = std::sqrt(total_r / total_s);
    for (const auto& [r, s] : pooled) {
        const double diff = k1 * r - k2 * s;
        out.statistic += diff * diff / (r + s);
    }
    out.dof = pooled.size() - 1;
    out.p_value = chi_square_pvalue(out.statistic, static_cast<double>(out.dof));
    return out;
}

/// One-sample goodness of fit against given bin probabilities; same pooling
/// rule on the expected counts.
inline ChiSquare goodness_of_fit(const std::vector<std::uint64_t>& observed,
                                 const std::vector<double>& probabilities, double min_expected = 5.0) {
    if (observed.size() != probabilities.size())
        throw std::invalid_argument("goodness_of_fit: size mismatch");
    double total = 0.0;
    for (std::uint64_t o : observed) total += static_cast<double>(o);
    std::vector<std::pair<double, double>> pooled;  // (observed, expected)
    double acc_o = 0.0, acc_e = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        acc_o += static_cast<double>(observed[i]);
        acc_e += total * probabilities[i];
        if (acc_e >= min_expected) {
            pooled.emplace_back(acc_o, acc_e);
            acc_o = acc_e = 0.0;
        }
    }
    if (acc_e > 0.0 || acc_o > 0.0) {
        if (!pooled.empty()) {
            pooled.back().first += acc_o;
            pooled.back().second += acc_e;
        } else {
            pooled.emplace_back(acc_o, acc_e);
        }
    }
    ChiSquare out;
    if (pooled.size() < 2) {
        out.dof = 0;
        out.p_value = 1.0;
        return out;
    }
    for (const auto& [o, e] : pooled) {
        const double diff = o - e;
        out.statistic += diff * diff / e;
    }
    out.dof = pooled.size() - 1;
    out.p_value = chi_square_pvalue(out.statistic, static_cast<double>(out.dof));
    return out;
}

}  // namespace widthlab
