#include "chowlab/cube.hpp"

#include <chrono>
#include <stdexcept>

namespace chow {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void require_cube_ctx(const CtxPtr& ctx) {
    if (ctx->n_ambient() != 0 || ctx->n_aux() != 0)
        throw std::invalid_argument("cube morphism context must have cube and param variables only");
}

// A scalar is a rational function in the parameters alone.
bool is_scalar(const CtxPtr& ctx, const RationalFunction& c) {
    for (int v : c.num().support_vars())
        if (!ctx->is_param_index(v)) return false;
    for (int v : c.den().support_vars())
        if (!ctx->is_param_index(v)) return false;
    return true;
}

RationalFunction rf_const(const CtxPtr& ctx, long v) {
    return RationalFunction::constant(ctx, Rational(v));
}

RationalFunction rf_var(const CtxPtr& ctx, int cube_slot_1based) {
    return RationalFunction::variable(ctx, ctx->cube_index(cube_slot_1based - 1));
}

}  // namespace

std::string Vertex::str() const {
    std::string s = "(";
    for (int i = 0; i < dim(); ++i) {
        if (i) s += ",";
        s += coords[i] ? "1" : "0";
    }
    return s + ")";
}

int vertex_sign(const Vertex& v) { return v.ones() % 2 == 0 ? 1 : -1; }

std::vector<Vertex> cube_vertices(int n) {
    std::vector<Vertex> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Vertex v;
        v.coords.resize(n);
        for (int i = 0; i < n; ++i) v.coords[i] = (mask >> i) & 1;
        out.push_back(std::move(v));
    }
    return out;
}

CubeMorphism::CubeMorphism(CtxPtr source, CtxPtr target, std::vector<RationalFunction> coords)
    : source_(std::move(source)), target_(std::move(target)), coords_(std::move(coords)) {
    require_cube_ctx(source_);
    require_cube_ctx(target_);
    if (source_->params != target_->params)
        throw std::invalid_argument("cube morphism endpoints must share parameters");
    if ((int)coords_.size() != target_->n_cube())
        throw std::invalid_argument("cube morphism coordinate count must match the target");
    for (const auto& c : coords_)
        if (!c.ctx()->same_names(*source_))
            throw std::invalid_argument("cube morphism coordinates must live in the source context");
}

CtxPtr CubeMorphism::cube_ctx(int n, std::vector<std::string> params) {
    std::vector<std::string> ys;
    for (int i = 1; i <= n; ++i) ys.push_back("y" + std::to_string(i));
    return VarContext::make({}, std::move(ys), {}, std::move(params));
}

CubeMorphism CubeMorphism::identity(const CtxPtr& ctx) {
    std::vector<RationalFunction> coords;
    for (int j = 1; j <= ctx->n_cube(); ++j) coords.push_back(rf_var(ctx, j));
    return CubeMorphism(ctx, ctx, std::move(coords));
}

CubeMorphism CubeMorphism::involution(const CtxPtr& ctx, int j) {
    if (j < 1 || j > ctx->n_cube()) throw std::out_of_range("involution index out of range");
    std::vector<RationalFunction> coords;
    for (int k = 1; k <= ctx->n_cube(); ++k)
        coords.push_back(k == j ? rf_const(ctx, 1) - rf_var(ctx, k) : rf_var(ctx, k));
    return CubeMorphism(ctx, ctx, std::move(coords));
}

CubeMorphism CubeMorphism::scaling(const CtxPtr& ctx, int j, const RationalFunction& c) {
    if (j < 1 || j > ctx->n_cube()) throw std::out_of_range("scaling index out of range");
    if (!is_scalar(ctx, c)) throw std::invalid_argument("scaling factor must be a scalar");
    if (c.is_zero() || c.equals(rf_const(ctx, 1)))
        throw std::invalid_argument("scaling by 0 or 1 is rejected");
    std::vector<RationalFunction> coords;
    for (int k = 1; k <= ctx->n_cube(); ++k)
        coords.push_back(k == j ? c * rf_var(ctx, k) : rf_var(ctx, k));
    return CubeMorphism(ctx, ctx, std::move(coords));
}

CubeMorphism CubeMorphism::multiplication(const CtxPtr& ctx2) {
    if (ctx2->n_cube() != 2) throw std::invalid_argument("multiplication needs the square");
    return CubeMorphism(ctx2, cube_ctx(1, ctx2->params), {rf_var(ctx2, 1) * rf_var(ctx2, 2)});
}

CubeMorphism CubeMorphism::face_map(const CtxPtr& ctx, int j, int eps) {
    int n = ctx->n_cube();
    if (j < 1 || j > n) throw std::out_of_range("face index out of range");
    if (eps != 0 && eps != 1) throw std::invalid_argument("face value must be 0 or 1");
    CtxPtr src = cube_ctx(n - 1, ctx->params);
    std::vector<RationalFunction> coords;
    for (int k = 1; k <= n; ++k) {
        if (k == j)
            coords.push_back(rf_const(src, eps));
        else
            coords.push_back(rf_var(src, k < j ? k : k - 1));
    }
    return CubeMorphism(src, ctx, std::move(coords));
}

CubeMorphism CubeMorphism::projection(const CtxPtr& ctx, int j) {
    int n = ctx->n_cube();
    if (j < 1 || j > n) throw std::out_of_range("projection index out of range");
    std::vector<RationalFunction> coords;
    for (int k = 1; k <= n; ++k)
        if (k != j) coords.push_back(rf_var(ctx, k));
    return CubeMorphism(ctx, cube_ctx(n - 1, ctx->params), std::move(coords));
}

CubeMorphism CubeMorphism::pi_v(const CtxPtr& ctx, const Vertex& v) {
    if (v.dim() != ctx->n_cube()) throw std::invalid_argument("vertex dimension mismatch");
    std::vector<RationalFunction> coords;
    for (int k = 1; k <= ctx->n_cube(); ++k)
        coords.push_back(v.coords[k - 1] ? rf_const(ctx, 1) - rf_var(ctx, k) : rf_var(ctx, k));
    return CubeMorphism(ctx, ctx, std::move(coords));
}

CubeMorphism CubeMorphism::iota_v(const CtxPtr& ctx, const Vertex& v,
                                  const std::vector<RationalFunction>& c) {
    int n = ctx->n_cube();
    if (v.dim() != n || (int)c.size() != n)
        throw std::invalid_argument("vertex or parameter tuple dimension mismatch");
    std::vector<RationalFunction> coords;
    for (int k = 1; k <= n; ++k) {
        if (!is_scalar(ctx, c[k - 1]))
            throw std::invalid_argument("subdivision parameters must be scalars");
        RationalFunction s = v.coords[k - 1] ? rf_const(ctx, 1) - c[k - 1] : c[k - 1];
        if (s.is_zero() || s.equals(rf_const(ctx, 1)))
            throw std::invalid_argument("scaling by 0 or 1 is rejected");
        coords.push_back(s * rf_var(ctx, k));
    }
    return CubeMorphism(ctx, ctx, std::move(coords));
}

CubeMorphism CubeMorphism::eta(const CtxPtr& ctx2, int ell, const RationalFunction& c) {
    if (ctx2->n_cube() != 2) throw std::invalid_argument("eta needs the square");
    if (ell != 0 && ell != 1) throw std::invalid_argument("eta level must be 0 or 1");
    if (!is_scalar(ctx2, c)) throw std::invalid_argument("eta parameter must be a scalar");
    RationalFunction one = rf_const(ctx2, 1);
    RationalFunction y = rf_var(ctx2, 1), z = rf_var(ctx2, 2);
    RationalFunction m = ell == 0 ? (one - (one - c) * (one - z)) * y
                                  : one - (one - c) * y * (one - z);
    return CubeMorphism(ctx2, cube_ctx(1, ctx2->params), {m});
}

CubeMorphism CubeMorphism::h_map(const CtxPtr& ctx_np1, int ell,
                                 const std::vector<RationalFunction>& c, int i) {
    int n = ctx_np1->n_cube() - 1;
    if (n < 1) throw std::invalid_argument("homotopy map needs at least the square");
    if (i < 1 || i > n) throw std::out_of_range("homotopy slot out of range");
    if ((int)c.size() != n) throw std::invalid_argument("parameter tuple must have one entry per slot");
    if (ell != 0 && ell != 1) throw std::invalid_argument("homotopy level must be 0 or 1");
    const RationalFunction& ci = c[i - 1];
    if (!is_scalar(ctx_np1, ci)) throw std::invalid_argument("homotopy parameter must be a scalar");
    RationalFunction one = rf_const(ctx_np1, 1);
    RationalFunction y = rf_var(ctx_np1, i), z = rf_var(ctx_np1, n + 1);
    std::vector<RationalFunction> coords;
    for (int k = 1; k <= n; ++k) {
        if (k != i) {
            coords.push_back(rf_var(ctx_np1, k));
        } else if (ell == 0) {
            coords.push_back((one - (one - ci) * (one - z)) * y);
        } else {
            coords.push_back(one - (one - ci) * y * (one - z));
        }
    }
    return CubeMorphism(ctx_np1, cube_ctx(n, ctx_np1->params), std::move(coords));
}

CubeMorphism CubeMorphism::composed(const CubeMorphism& g) const {
    if (g.target_dim() != source_dim())
        throw std::invalid_argument("compose dimension mismatch");
    if (g.source()->params != source_->params)
        throw std::invalid_argument("compose parameter mismatch");
    std::vector<std::optional<RationalFunction>> values(source_->total());
    for (int k = 0; k < source_dim(); ++k) values[source_->cube_index(k)] = g.coords()[k];
    std::vector<RationalFunction> out;
    for (const auto& co : coords_) out.push_back(co.substituted(g.source(), values));
    return CubeMorphism(g.source(), target_, std::move(out));
}

bool CubeMorphism::equals(const CubeMorphism& o) const {
    if (source_dim() != o.source_dim() || target_dim() != o.target_dim()) return false;
    if (!source_->same_names(*o.source())) return false;
    for (int k = 0; k < target_dim(); ++k)
        if (!coords_[k].equals(o.coords()[k])) return false;
    return true;
}

std::string CubeMorphism::str() const {
    std::string s = "(";
    for (int k = 0; k < target_dim(); ++k) {
        if (k) s += ", ";
        s += coords_[k].str();
    }
    return s + ")";
}

SuiteReport verify_eta_table() {
    auto t0 = Clock::now();
    SuiteReport rep;
    rep.suite = "eta-table";
    rep.statement =
        "the maps eta_c^0(y,z) = (1-(1-c)(1-z))y and eta_c^1(y,z) = 1-(1-c)y(1-z) restrict on "
        "the four boundary lines to scalings, involutions, constants and the identity, and "
        "factor through the multiplication map; all identities hold with c symbolic";

    CtxPtr sq = CubeMorphism::cube_ctx(2, {"c"});
    CtxPtr ln = CubeMorphism::cube_ctx(1, {"c"});
    RationalFunction c2 = RationalFunction::variable(sq, sq->param_index(0));
    RationalFunction c1 = RationalFunction::variable(ln, ln->param_index(0));
    RationalFunction one1 = rf_const(ln, 1);
    CubeMorphism e0 = CubeMorphism::eta(sq, 0, c2);
    CubeMorphism e1 = CubeMorphism::eta(sq, 1, c2);
    auto expect = [&](const std::string& formula) {
        return CubeMorphism(ln, ln, {RationalFunction::parse(ln, formula)});
    };
    auto check = [&](const std::string& name, const CubeMorphism& got, const CubeMorphism& want) {
        rep.add(name, got.equals(want),
                got.equals(want) ? "" : "got " + got.str() + ", want " + want.str());
    };

    check("eta0(y,0) = c*y", e0.composed(CubeMorphism::face_map(sq, 2, 0)),
          CubeMorphism::scaling(ln, 1, c1));
    check("eta0(y,1) = y", e0.composed(CubeMorphism::face_map(sq, 2, 1)),
          CubeMorphism::identity(ln));
    check("eta0(0,z) = 0", e0.composed(CubeMorphism::face_map(sq, 1, 0)), expect("0"));
    check("eta0(1,z) = 1-(1-c)(1-z)", e0.composed(CubeMorphism::face_map(sq, 1, 1)),
          expect("1 - (1 - c)*(1 - y1)"));
    check("eta1(y,0) = 1-(1-c)y", e1.composed(CubeMorphism::face_map(sq, 2, 0)),
          CubeMorphism::involution(ln, 1).composed(CubeMorphism::scaling(ln, 1, one1 - c1)));
    check("eta1(y,1) = 1", e1.composed(CubeMorphism::face_map(sq, 2, 1)), expect("1"));
    check("eta1(0,z) = 1", e1.composed(CubeMorphism::face_map(sq, 1, 0)), expect("1"));
    check("eta1(1,z) = 1-(1-c)(1-z)", e1.composed(CubeMorphism::face_map(sq, 1, 1)),
          expect("1 - (1 - c)*(1 - y1)"));

    // factorizations through the multiplication map
    CubeMorphism t2 = CubeMorphism::involution(sq, 2);
    CubeMorphism t1sq = CubeMorphism::involution(sq, 1);
    CubeMorphism mu = CubeMorphism::multiplication(sq);
    RationalFunction onesq = rf_const(sq, 1);
    CubeMorphism f0 = mu.composed(t2.composed(CubeMorphism::scaling(sq, 2, onesq - c2).composed(t2)));
    check("eta0 = mu.tau2.sigma(1-c,2).tau2", e0, f0);
    CubeMorphism t1ln = CubeMorphism::involution(ln, 1);
    CubeMorphism f1 = t1ln.composed(mu.composed(CubeMorphism::scaling(sq, 1, onesq - c2).composed(t2)));
    check("eta1 = tau1.mu.sigma(1-c,1).tau2", e1, f1);

    rep.elapsed_ms = ms_since(t0);
    return rep;
}

SuiteReport verify_h_face_table(int nmax) {
    auto t0 = Clock::now();
    SuiteReport rep;
    rep.suite = "h-faces";
    rep.statement =
        "every face restriction of the homotopy map on the (n+1)-cube is the predicted named "
        "morphism: a face of the one-lower homotopy map off the active slot, an insertion "
        "after a projection on the active slot, and a scaling, a flipped scaling, a constant "
        "insertion or the identity on the homotopy slot; symbolic parameter tuple, n up to nmax";

    for (int n = 1; n <= nmax; ++n) {
        std::vector<std::string> params;
        for (int k = 1; k <= n; ++k) params.push_back("c" + std::to_string(k));
        CtxPtr up = CubeMorphism::cube_ctx(n + 1, params);
        CtxPtr dn = CubeMorphism::cube_ctx(n, params);
        auto cvec = [&](const CtxPtr& ctx) {
            std::vector<RationalFunction> cs;
            for (int k = 0; k < n; ++k)
                cs.push_back(RationalFunction::variable(ctx, ctx->param_index(k)));
            return cs;
        };
        auto cvec_minus = [&](const CtxPtr& ctx, int j) {
            auto cs = cvec(ctx);
            cs.erase(cs.begin() + (j - 1));
            return cs;
        };
        RationalFunction one = rf_const(dn, 1);

        for (int i = 1; i <= n; ++i) {
            for (int ell = 0; ell <= 1; ++ell) {
                CubeMorphism H = CubeMorphism::h_map(up, ell, cvec(up), i);
                for (int j = 1; j <= n + 1; ++j) {
                    for (int eps = 0; eps <= 1; ++eps) {
                        std::string tag = "n=" + std::to_string(n) + ",i=" + std::to_string(i) +
                                          ",l=" + std::to_string(ell) + ",j=" + std::to_string(j) +
                                          ",e=" + std::to_string(eps) + ": ";
                        CubeMorphism lhs = H.composed(CubeMorphism::face_map(up, j, eps));
                        if (j <= n && j != i) {
                            int ii = j < i ? i - 1 : i;
                            CubeMorphism rhs = CubeMorphism::face_map(dn, j, eps)
                                                   .composed(CubeMorphism::h_map(
                                                       dn, ell, cvec_minus(dn, j), ii));
                            rep.add(tag + "face of the lower homotopy map", lhs.equals(rhs));
                        } else if (j == i && eps == 0) {
                            CubeMorphism rhs = CubeMorphism::face_map(dn, i, ell)
                                                   .composed(CubeMorphism::projection(dn, n));
                            rep.add(tag + "insert level after dropping the last slot",
                                    lhs.equals(rhs));
                        } else if (j == i && eps == 1) {
                            // both levels agree on this face; pin the formula once
                            if (ell == 0) {
                                CubeMorphism other = CubeMorphism::h_map(up, 1, cvec(up), i)
                                                         .composed(CubeMorphism::face_map(up, j, 1));
                                rep.add(tag + "levels 0 and 1 agree", lhs.equals(other));
                                std::vector<RationalFunction> exp;
                                RationalFunction ci = cvec(dn)[i - 1];
                                for (int k = 1; k <= n; ++k) {
                                    if (k < i)
                                        exp.push_back(rf_var(dn, k));
                                    else if (k == i)
                                        exp.push_back(one - (one - ci) * (one - rf_var(dn, n)));
                                    else
                                        exp.push_back(rf_var(dn, k - 1));
                                }
                                rep.add(tag + "pinned coordinate formula",
                                        lhs.equals(CubeMorphism(dn, dn, exp)));
                            } else {
                                rep.add(tag + "levels 0 and 1 agree (checked at l=0)", true);
                            }
                        } else if (j == n + 1 && ell == 0) {
                            CubeMorphism rhs = eps == 0
                                                   ? CubeMorphism::scaling(dn, i, cvec(dn)[i - 1])
                                                   : CubeMorphism::identity(dn);
                            rep.add(tag + (eps == 0 ? "scaling" : "identity"), lhs.equals(rhs));
                        } else {
                            CubeMorphism rhs =
                                eps == 0
                                    ? CubeMorphism::involution(dn, i).composed(CubeMorphism::scaling(
                                          dn, i, one - cvec(dn)[i - 1]))
                                    : CubeMorphism::face_map(dn, i, 1)
                                          .composed(CubeMorphism::projection(dn, i));
                            rep.add(tag + (eps == 0 ? "flipped scaling" : "insert 1 after dropping the slot"),
                                    lhs.equals(rhs));
                        }
                    }
                }
            }
        }
    }
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

}  // namespace chow
