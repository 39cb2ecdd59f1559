#include "convecta/critical.hpp"

#include "convecta/assembly.hpp"
#include "convecta/eigensolve.hpp"
#include "convecta/errors.hpp"
#include "convecta/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

namespace convecta {

std::string to_string(MethodKind k) {
    switch (k) {
        case MethodKind::ChandrasekharCoupled: return "chandrasekhar";
        case MethodKind::ChandrasekharEliminated: return "chandrasekhar-eliminated";
        case MethodKind::Legendre: return "legendre";
        case MethodKind::RamaRao: return "rama-rao";
        case MethodKind::Collocation: return "collocation";
    }
    return "?";
}

int Method::resolved_truncation() const {
    if (truncation > 0) return truncation;
    switch (kind) {
        case MethodKind::ChandrasekharCoupled:
        case MethodKind::ChandrasekharEliminated: return 6;
        case MethodKind::Legendre:
        case MethodKind::RamaRao: return 8;
        case MethodKind::Collocation: return 64;
    }
    return 6;
}

int Method::resolved_theta_count() const {
    return theta_count > 0 ? theta_count : 2 * resolved_truncation();
}

double rayleigh_at(const ProblemParams& params, const Method& method) {
    params.validate();
    const int t = method.resolved_truncation();
    switch (method.kind) {
        case MethodKind::ChandrasekharCoupled: {
            // Chandrasekhar functions are centered-native, but the assembly
            // accepts either convention; keep the caller's.
            const BasisFamily w{BasisKind::Chandrasekhar, t, t};
            const BasisFamily th{BasisKind::SineDirichlet, method.resolved_theta_count(), 0};
            return *solve_pencil(assemble_coupled(params, w, th, method.quad_order)).r_min;
        }
        case MethodKind::ChandrasekharEliminated: {
            ProblemParams p = params;
            p.domain = Domain::Centered;
            const auto roots = chandrasekhar_roots(t, t);
            const BasisFamily fam{BasisKind::Chandrasekhar, t, t};
            return *solve_pencil(assemble_theta_eliminated(p, roots, fam, method.quad_order))
                        .r_min;
        }
        case MethodKind::Legendre: {
            ProblemParams p = params;
            p.domain = Domain::Shifted;
            return *solve_pencil(assemble_legendre(p, t, method.quad_order)).r_min;
        }
        case MethodKind::RamaRao:
            return *solve_pencil(assemble_rama_rao(params, t, method.quad_order)).r_min;
        case MethodKind::Collocation: return collocation_rayleigh(params, t);
    }
    throw ContractError("rayleigh_at: unknown method");
}

NeutralCurve neutral_curve(double n_rate, const std::vector<double>& a2_grid,
                           const Method& method, int jobs) {
    if (a2_grid.empty()) throw ContractError("neutral_curve: empty a2 grid");
    for (std::size_t i = 0; i < a2_grid.size(); ++i) {
        if (!(a2_grid[i] > 0.0)) throw ContractError("neutral_curve: grid must be positive");
        if (i > 0 && !(a2_grid[i] > a2_grid[i - 1]))
            throw ContractError("neutral_curve: grid must be strictly increasing");
    }

    const int n = static_cast<int>(a2_grid.size());
    std::vector<double> values(n, std::numeric_limits<double>::quiet_NaN());
    std::vector<char> onset(n, 0);

    auto eval_point = [&](int i) {
        try {
            values[i] = rayleigh_at({a2_grid[i], n_rate, Domain::Centered}, method);
            onset[i] = 1;
        } catch (const NoOnsetError&) {
            onset[i] = 0;
        }
    };

    if (jobs <= 1 || n == 1) {
        for (int i = 0; i < n; ++i) eval_point(i);
    } else {
        std::atomic<int> next{0};
        std::exception_ptr first_error;
        std::mutex error_mutex;
        auto worker = [&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
                try {
                    eval_point(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        };
        std::vector<std::thread> pool;
        const int count = std::min(jobs, n);
        pool.reserve(count);
        for (int i = 0; i < count; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    NeutralCurve curve;
    curve.n_rate = n_rate;
    for (int i = 0; i < n; ++i) {
        if (onset[i])
            curve.samples.emplace_back(a2_grid[i], values[i]);
        else
            curve.skipped.push_back(a2_grid[i]);
    }
    if (curve.samples.empty())
        throw NoOnsetError("neutral_curve: no onset at any grid point (empty curve)");
    return curve;
}

CriticalPoint critical_point(double n_rate, std::pair<double, double> bracket,
                             const Method& method) {
    const auto [lo, hi] = bracket;
    if (!(lo > 0.0) || !(lo < hi))
        throw ContractError("critical_point: bracket must satisfy 0 < a2_lo < a2_hi");

    auto f = [&](double a2) { return rayleigh_at({a2, n_rate, Domain::Centered}, method); };
    f(lo);
    f(hi); // R must be evaluable at both ends

    constexpr double kInvPhi = 0.6180339887498949;
    constexpr double kTol = 1e-4;
    double a = lo, b = hi;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > kTol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
        }
    }
    CriticalPoint point;
    point.n_rate = n_rate;
    point.method = method;
    point.a2_c = fc < fd ? c : d;
    point.r_c = std::min(fc, fd);

    const double edge = std::max(10.0 * kTol, 1e-3 * (hi - lo));
    if (point.a2_c - lo < edge || hi - point.a2_c < edge)
        throw BracketError("critical_point: minimum at bracket endpoint a2 = " +
                           std::to_string(point.a2_c) + "; enlarge the bracket");

    // Local-minimum certificate on the five nearest samples.
    const double step = std::min(0.1, 0.25 * std::min(point.a2_c - lo, hi - point.a2_c));
    for (int k : {-2, -1, 1, 2}) {
        const double probe = point.a2_c + k * step;
        if (!(f(probe) + 1e-9 * std::max(1.0, std::abs(point.r_c)) >= point.r_c))
            throw NumericError("critical_point: local-minimum certificate failed "
                               "(R not unimodal on the bracket?)");
    }
    return point;
}

} // namespace convecta
