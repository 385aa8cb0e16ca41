#pragma once

// Thin RAII layer over the GSL QUADPACK routines. Integrands are arbitrary
// callables; they must not throw.

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <cmath>
#include <memory>
#include <utility>

#include "levysobolev/constants.hpp"

namespace levysobolev::detail {

struct QuadResult {
    double value = 0.0;
    double abserr = 0.0;
    int status = GSL_SUCCESS;

    bool ok() const { return status == GSL_SUCCESS && std::isfinite(value); }
};

inline void silence_gsl() {
    static const bool once = [] {
        gsl_set_error_handler_off();
        return true;
    }();
    (void)once;
}

struct WorkspaceDeleter {
    void operator()(gsl_integration_workspace* w) const { gsl_integration_workspace_free(w); }
};
struct QawoTableDeleter {
    void operator()(gsl_integration_qawo_table* t) const { gsl_integration_qawo_table_free(t); }
};

using Workspace = std::unique_ptr<gsl_integration_workspace, WorkspaceDeleter>;

inline Workspace make_workspace(int limit = defaults::quad_limit) {
    silence_gsl();
    return Workspace(gsl_integration_workspace_alloc(static_cast<size_t>(limit)));
}

template <class F>
double trampoline(double x, void* params) {
    return (*static_cast<F*>(params))(x);
}

template <class F>
gsl_function as_gsl(F& f) {
    gsl_function g;
    g.function = &trampoline<F>;
    g.params = &f;
    return g;
}

/// Adaptive Gauss-Kronrod on a finite interval (smooth integrands).
template <class F>
QuadResult qag(F f, double a, double b, double epsabs, double epsrel,
               int limit = defaults::quad_limit, int key = GSL_INTEG_GAUSS41) {
    QuadResult r;
    if (a == b) return r;
    auto ws = make_workspace(limit);
    gsl_function g = as_gsl(f);
    r.status = gsl_integration_qag(&g, a, b, epsabs, epsrel, static_cast<size_t>(limit), key,
                                   ws.get(), &r.value, &r.abserr);
    return r;
}

/// Adaptive quadrature with extrapolation; tolerates integrable endpoint singularities.
template <class F>
QuadResult qags(F f, double a, double b, double epsabs, double epsrel,
                int limit = defaults::quad_limit) {
    QuadResult r;
    if (a == b) return r;
    auto ws = make_workspace(limit);
    gsl_function g = as_gsl(f);
    r.status = gsl_integration_qags(&g, a, b, epsabs, epsrel, static_cast<size_t>(limit),
                                    ws.get(), &r.value, &r.abserr);
    return r;
}

/// \int_a^b f(x) cos(omega x) dx  (or sin when `sine`), Clenshaw-Curtis with Chebyshev moments.
template <class F>
QuadResult qawo(F f, double a, double b, double omega, bool sine, double epsabs, double epsrel,
                int limit = defaults::quad_limit) {
    QuadResult r;
    if (a == b) return r;
    silence_gsl();
    std::unique_ptr<gsl_integration_qawo_table, QawoTableDeleter> table(
        gsl_integration_qawo_table_alloc(omega, b - a, sine ? GSL_INTEG_SINE : GSL_INTEG_COSINE, 64));
    auto ws = make_workspace(limit);
    gsl_function g = as_gsl(f);
    r.status = gsl_integration_qawo(&g, a, epsabs, epsrel, static_cast<size_t>(limit), ws.get(),
                                    table.get(), &r.value, &r.abserr);
    return r;
}

/// \int_a^inf f(x) dx.
template <class F>
QuadResult qagiu(F f, double a, double epsabs, double epsrel, int limit = defaults::quad_limit) {
    QuadResult r;
    auto ws = make_workspace(limit);
    gsl_function g = as_gsl(f);
    r.status = gsl_integration_qagiu(&g, a, epsabs, epsrel, static_cast<size_t>(limit), ws.get(),
                                     &r.value, &r.abserr);
    return r;
}

/// \int_a^inf f(x) cos(omega x) dx (or sin), Fourier integral by cycle-wise extrapolation.
template <class F>
QuadResult qawf(F f, double a, double omega, bool sine, double epsabs, int limit = defaults::quad_limit) {
    QuadResult r;
    silence_gsl();
    std::unique_ptr<gsl_integration_qawo_table, QawoTableDeleter> table(
        gsl_integration_qawo_table_alloc(omega, 1.0, sine ? GSL_INTEG_SINE : GSL_INTEG_COSINE, 64));
    auto ws = make_workspace(limit);
    auto cycle_ws = make_workspace(limit);
    gsl_function g = as_gsl(f);
    r.status = gsl_integration_qawf(&g, a, epsabs, static_cast<size_t>(limit), ws.get(), cycle_ws.get(),
                                    table.get(), &r.value, &r.abserr);
    return r;
}

}  // namespace levysobolev::detail
