#include "thomae/context.hpp"

namespace thomae {

CurveContext make_context(const CurveSpec& spec, const PeriodData& pd, const ContextOptions& opt) {
    CurveContext cx;
    cx.spec = spec;
    cx.periods = pd;
    cx.engine = std::make_shared<ThetaEngine>(ThetaParams{pd.tau, opt.theta_tol});
    cx.table = std::make_shared<ThetaTable>(cx.engine, opt.max_order);
    if (opt.fill) cx.table->fill_all();
    return cx;
}

CurveContext make_context(const CurveSpec& spec, const ContextOptions& opt) {
    return make_context(spec, compute_periods(spec, opt.quad_order), opt);
}

}  // namespace thomae
