#include "estarlab/claims.hpp"

#include <algorithm>

#include "estarlab/errors.hpp"
#include "estarlab/parallel.hpp"

namespace estarlab {

namespace {

// ---------------------------------------------------------------------------
// Small helpers shared by the checks
// ---------------------------------------------------------------------------

template <class Fn>
CheckOutcome for_all_subsets(const FiniteSpace& sp, Fn fn) {
    for (Mask a = 0; a <= sp.universe(); ++a) {
        auto failure = fn(a);
        if (failure) return CheckOutcome::fail(*failure);
    }
    return CheckOutcome::pass();
}

BiopContextPtr with_constant_x(const BiopContext& ctx) {
    auto x_op = bind_operation(ctx.space_ptr(), OperationSpec::constant_x());
    return make_context(std::make_shared<const BoundOperation>(ctx.gamma()), x_op);
}

OperationPtr identity_on(const SpacePtr& sp) { return bind_operation(sp, OperationSpec::identity()); }

std::string set_str(const FiniteSpace& sp, Mask m) { return sp.set_name(m); }

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

std::vector<Claim> build_registry() {
    std::vector<Claim> reg;

    auto add_space = [&](std::string id, ClaimKind kind, std::string statement,
                         std::function<CheckOutcome(const SpacePtr&)> fn) {
        Claim c;
        c.id = std::move(id);
        c.kind = kind;
        c.statement = std::move(statement);
        c.target = Claim::Target::space;
        c.check_space = std::move(fn);
        reg.push_back(std::move(c));
    };
    auto add_pair = [&](std::string id, ClaimKind kind, std::string statement,
                        std::function<CheckOutcome(const OpPairInstance&)> fn) {
        Claim c;
        c.id = std::move(id);
        c.kind = kind;
        c.statement = std::move(statement);
        c.target = Claim::Target::op_pair;
        c.check_pair = std::move(fn);
        reg.push_back(std::move(c));
    };
    auto add_morphism = [&](std::string id, ClaimKind kind, std::string statement,
                            std::function<CheckOutcome(const MorphismInstance&)> fn) {
        Claim c;
        c.id = std::move(id);
        c.kind = kind;
        c.statement = std::move(statement);
        c.target = Claim::Target::morphism;
        c.check_morphism = std::move(fn);
        reg.push_back(std::move(c));
    };

    const auto hard = ClaimKind::hard_invariant;
    const auto paper = ClaimKind::paper_claim;

    // -- base operator laws ---------------------------------------------------

    add_space("C-BASE", hard,
              "interior/closure laws, delta-operator duality, open => e*-open, "
              "regular-open => open, e*O union-closed",
              [](const SpacePtr& spp) -> CheckOutcome {
                  const FiniteSpace& sp = *spp;
                  const Mask full = sp.universe();
                  for (Mask a = 0; a <= full; ++a) {
                      const Mask ia = sp.interior(a), ca = sp.closure(a);
                      if (sp.interior(ia) != ia || sp.closure(ca) != ca)
                          return CheckOutcome::fail("idempotence fails at A=" + set_str(sp, a));
                      if (ia != sp.complement(sp.closure(sp.complement(a))))
                          return CheckOutcome::fail("Int/Cl duality fails at A=" + set_str(sp, a));
                      if (sp.estar_interior(a) !=
                          sp.complement(sp.estar_closure(sp.complement(a))))
                          return CheckOutcome::fail("e*Int/e*Cl duality fails at A=" + set_str(sp, a));
                      if (sp.delta_interior(a) !=
                          sp.complement(sp.delta_closure(sp.complement(a))))
                          return CheckOutcome::fail("delta duality fails at A=" + set_str(sp, a));
                      if (!subset_of(a, sp.delta_closure(a)) && a != 0)
                          return CheckOutcome::fail("A not inside Cl_delta(A) at A=" + set_str(sp, a));
                      if (sp.is_regular_open(a) && !sp.is_open(a))
                          return CheckOutcome::fail("regular-open set not open: " + set_str(sp, a));
                  }
                  for (Mask a = 0; a <= full; ++a) {
                      const Mask comp = full & ~a;
                      for (Mask s = comp;; s = (s - 1) & comp) {
                          const Mask b = a | s;
                          if (!subset_of(sp.closure(a), sp.closure(b)) ||
                              !subset_of(sp.delta_closure(a), sp.delta_closure(b)))
                              return CheckOutcome::fail("closure monotonicity fails for A=" +
                                                        set_str(sp, a) + ", B=" + set_str(sp, b));
                          if (s == 0) break;
                      }
                  }
                  for (Mask u : sp.opens())
                      if (!sp.is_estar_open(u))
                          return CheckOutcome::fail("open set not e*-open: " + set_str(sp, u));
                  if (!sp.estar_opens().contains(0) || !sp.estar_opens().contains(full))
                      return CheckOutcome::fail("e*O misses {} or X");
                  if (!sp.estar_opens().union_closed())
                      return CheckOutcome::fail("e*O not union-closed");
                  return CheckOutcome::pass();
              });

    // -- section 3 ------------------------------------------------------------

    add_pair("C-P3.1", hard, "unions of bi-open sets are bi-open",
             [](const OpPairInstance& inst) -> CheckOutcome {
                 if (!inst.ctx->biopen_family().union_closed())
                     return CheckOutcome::fail("bi-open family not union-closed");
                 return CheckOutcome::pass();
             });

    add_pair("C-P3.2", hard,
             "for e*-regular gamma and gamma', intersections of bi-open sets are bi-open "
             "(so the family is a topology)",
             [](const OpPairInstance& inst) -> CheckOutcome {
                 if (!is_estar_regular(inst.ctx->gamma()) ||
                     !is_estar_regular(inst.ctx->gamma_prime()))
                     return CheckOutcome::skip();
                 const auto& fam = inst.ctx->biopen_family();
                 const FiniteSpace& sp = inst.ctx->space();
                 for (Mask a : fam.members())
                     for (Mask b : fam.members())
                         if (!fam.contains(a & b))
                             return CheckOutcome::fail("A=" + set_str(sp, a) + ", B=" +
                                                       set_str(sp, b) + ": intersection " +
                                                       set_str(sp, a & b) + " not bi-open");
                 return CheckOutcome::pass();
             });

    add_pair("C-P3.3", hard,
             "A is bi-open iff every x in A has a bi-open B with x in B inside A",
             [](const OpPairInstance& inst) -> CheckOutcome {
                 const FiniteSpace& sp = inst.ctx->space();
                 return for_all_subsets(sp, [&](Mask a) -> std::optional<std::string> {
                     bool nbhd = true;
                     for (int x = 0; x < sp.point_count() && nbhd; ++x) {
                         if (!has_point(a, x)) continue;
                         bool found = false;
                         for (Mask b : inst.ctx->biopen_family().members())
                             if (has_point(b, x) && subset_of(b, a)) {
                                 found = true;
                                 break;
                             }
                         nbhd = found;
                     }
                     if (inst.ctx->is_biopen(a) != nbhd)
                         return "A=" + set_str(sp, a) + ": membership and neighbourhood "
                                "characterization disagree";
                     return std::nullopt;
                 });
             });

    add_pair("C-P3.4a", hard,
             "A inside e*Cl(A); A inside pointwise closure; pointwise inside lattice closure",
             [](const OpPairInstance& inst) -> CheckOutcome {
                 const FiniteSpace& sp = inst.ctx->space();
                 return for_all_subsets(sp, [&](Mask a) -> std::optional<std::string> {
                     const Mask pcl = inst.ctx->closure_pointwise(a);
                     if (!subset_of(a, sp.estar_closure(a)))
                         return "A=" + set_str(sp, a) + " not inside e*Cl(A)";
                     if (!subset_of(a, pcl)) return "A=" + set_str(sp, a) + " not inside e*Cl_[g,g'](A)";
                     if (!subset_of(pcl, inst.ctx->closure_lattice(a)))
                         return "A=" + set_str(sp, a) + ": pointwise closure " + set_str(sp, pcl) +
                                " outside lattice closure " +
                                set_str(sp, inst.ctx->closure_lattice(a));
                     return std::nullopt;
                 });
             });

    add_pair("C-P3.4b", paper,
             "e*Cl(A) is inside the pointwise closure e*Cl_[gamma,gamma'](A)",
             [](const OpPairInstance& inst) -> CheckOutcome {
                 const FiniteSpace& sp = inst.ctx->space();
                 return for_all_subsets(sp, [&](Mask a) -> std::optional<std::string> {
                     const Mask ecl = sp.estar_closure(a);
                     const Mask pcl = inst.ctx->closure_pointwise(a);
                     if (!subset_of(ecl, pcl))
                         return "A=" + set_str(sp, a) + ": e*Cl(A)=" + set_str(sp, ecl) +
                                " not inside e*Cl_[g,g'](A)=" + set_str(sp, pcl);
                     return std::nullopt;
                 });
             });

    add_pair("C-P3.5", paper, "every bi-open set is e*-open",
             [](const OpPairInstance& inst) -> CheckOutcome {
                 const FiniteSpace& sp = inst.ctx->space();
                 for (Mask a : inst.ctx->biopen_family().members())
                     if (!sp.is_estar_open(a))
                         return CheckOutcome::fail("bi-open but not e*-open: " + set_str(sp, a));
                 return CheckOutcome::pass();
             });

    add_pair("C-P3.6", hard, "e*_gamma-open intersected with e*_gamma'-open is bi-open",
             [](const OpPairInstance& inst) -> CheckOutcome {
                 const FiniteSpace& sp = inst.ctx->space();
                 const SetFamily fg = single_op_open_family(inst.ctx->gamma());
                 const SetFamily fgp = single_op_open_family(inst.ctx->gamma_prime());
                 for (Mask a : fg.members())
                     for (Mask b : fgp.members())
                         if (!inst.ctx->is_biopen(a & b))
                             return CheckOutcome::fail("A=" + set_str(sp, a) + ", B=" +
                                                       set_str(sp, b) + ": " + set_str(sp, a & b) +
                                                       " not bi-open");
                 return CheckOutcome::pass();
             });

    add_pair("C-P3.7", hard, "every e*_gamma-open set is bi-open for any gamma'",
             [](const OpPairInstance& inst) -> CheckOutcome {
                 const FiniteSpace& sp = inst.ctx->space();
                 for (Mask a : single_op_open_family(inst.ctx->gamma()).members())
                     if (!inst.ctx->is_biopen(a))
                         return CheckOutcome::fail("e*_gamma-open but not bi-open: " +
                                                   set_str(sp, a));
                 return CheckOutcome::pass();
             });

    add_pair("C-P3.8", hard,
             "the space is e*_gamma-regular iff e*O equals the e*_gamma-open family",
             [](const OpPairInstance& inst) -> CheckOutcome {
                 const bool reg = is_estar_gamma_regular_space(inst.ctx->gamma());
                 const bool eq =
                     single_op_open_family(inst.ctx->gamma()) == inst.ctx->space().estar_opens();
                 if (reg != eq)
                     return CheckOutcome::fail(std::string("regular=") + (reg ? "yes" : "no") +
                                               " but families " + (eq ? "equal" : "differ"));
                 return CheckOutcome::pass();
             });

    add_pair("C-P3.9", hard,
             "with gamma' the whole-set operation, bi-open coincides with e*_gamma-open",
             [](const OpPairInstance& inst) -> CheckOutcome {
                 auto reduced = with_constant_x(*inst.ctx);
                 if (!(reduced->biopen_family() ==
                       single_op_open_family(inst.ctx->gamma())))
                     return CheckOutcome::fail("families differ under the gamma'=X reduction");
                 return CheckOutcome::pass();
             });

    add_pair("C-P3.10", paper,
             "the space is e*_[gamma,gamma']-regular iff e*O equals the bi-open family",
             [](const OpPairInstance& inst) -> CheckOutcome {
                 const bool reg = inst.ctx->is_regular_space();
                 const bool eq = inst.ctx->biopen_family() == inst.ctx->space().estar_opens();
                 if (reg != eq) {
                     const FiniteSpace& sp = inst.ctx->space();
                     std::string delta;
                     for (Mask a : inst.ctx->biopen_family().members())
                         if (!sp.estar_opens().contains(a)) {
                             delta = "; bi-open non-e*-open witness " + set_str(sp, a);
                             break;
                         }
                     return CheckOutcome::fail(std::string("regular=") + (reg ? "yes" : "no") +
                                               " but families " + (eq ? "equal" : "differ") + delta);
                 }
                 return CheckOutcome::pass();
             });

    add_pair("C-P3.11", hard,
             "[gamma,X]-regularity equals gamma-regularity; gamma- and gamma'-regular "
             "imply pair-regular",
             [](const OpPairInstance& inst) -> CheckOutcome {
                 auto reduced = with_constant_x(*inst.ctx);
                 const bool lhs = reduced->is_regular_space();
                 const bool rhs = is_estar_gamma_regular_space(inst.ctx->gamma());
                 if (lhs != rhs)
                     return CheckOutcome::fail("[gamma,X]-regular and e*_gamma-regular disagree");
                 if (is_estar_gamma_regular_space(inst.ctx->gamma()) &&
                     is_estar_gamma_regular_space(inst.ctx->gamma_prime()) &&
                     !inst.ctx->is_regular_space())
                     return CheckOutcome::fail(
                         "both single-operation regular but the pair is not");
                 return CheckOutcome::pass();
             });

    add_pair("C-P3.12", hard,
             "x lies in the lattice closure of A iff every bi-open set containing x meets A",
             [](const OpPairInstance& inst) -> CheckOutcome {
                 const FiniteSpace& sp = inst.ctx->space();
                 return for_all_subsets(sp, [&](Mask a) -> std::optional<std::string> {
                     const Mask lcl = inst.ctx->closure_lattice(a);
                     for (int x = 0; x < sp.point_count(); ++x) {
                         bool every_meets = true;
                         for (Mask v : inst.ctx->biopen_family().members())
                             if (has_point(v, x) && (v & a) == 0) {
                                 every_meets = false;
                                 break;
                             }
                         if (every_meets != has_point(lcl, x))
                             return "A=" + set_str(sp, a) + ", x=" + sp.points()[x] +
                                    ": neighbourhood test and lattice closure disagree";
                     }
                     return std::nullopt;
                 });
             });

    add_pair("C-P3.13", hard,
             "lattice-closure laws: extensive, monotone, fixed points are the bi-closed "
             "sets, closed output, intersection bound, union additivity for regular pairs",
             [](const OpPairInstance& inst) -> CheckOutcome {
                 const FiniteSpace& sp = inst.ctx->space();
                 const auto& ctx = *inst.ctx;
                 const Mask full = sp.universe();
                 const bool regular_ops = is_estar_regular(ctx.gamma()) &&
                                          is_estar_regular(ctx.gamma_prime());
                 for (Mask a = 0; a <= full; ++a) {
                     const Mask la = ctx.closure_lattice(a);
                     if (!subset_of(a, la))
                         return CheckOutcome::fail("(1) fails at A=" + set_str(sp, a));
                     if (ctx.biclosed_family().contains(a) != (la == a))
                         return CheckOutcome::fail("(3) fails at A=" + set_str(sp, a));
                     if (!ctx.biclosed_family().contains(la))
                         return CheckOutcome::fail("(4) fails at A=" + set_str(sp, a));
                     const Mask comp = full & ~a;
                     for (Mask s = comp;; s = (s - 1) & comp) {
                         const Mask b = a | s;
                         if (!subset_of(la, ctx.closure_lattice(b)))
                             return CheckOutcome::fail("(2) fails at A=" + set_str(sp, a) +
                                                       ", B=" + set_str(sp, b));
                         if (s == 0) break;
                     }
                     for (Mask b = 0; b <= full; ++b) {
                         if (!subset_of(ctx.closure_lattice(a & b),
                                        ctx.closure_lattice(a) & ctx.closure_lattice(b)))
                             return CheckOutcome::fail("(5) fails at A=" + set_str(sp, a) +
                                                       ", B=" + set_str(sp, b));
                         if (regular_ops &&
                             ctx.closure_lattice(a | b) !=
                                 (ctx.closure_lattice(a) | ctx.closure_lattice(b)))
                             return CheckOutcome::fail("(6) fails at A=" + set_str(sp, a) +
                                                       ", B=" + set_str(sp, b));
                     }
                 }
                 return CheckOutcome::pass();
             });

    add_pair("C-P3.15", hard,
             "interior laws: bi-open output, fixed points, idempotence, contraction, "
             "monotonicity, union/intersection bounds",
             [](const OpPairInstance& inst) -> CheckOutcome {
                 const FiniteSpace& sp = inst.ctx->space();
                 const auto& ctx = *inst.ctx;
                 const Mask full = sp.universe();
                 for (Mask a = 0; a <= full; ++a) {
                     const Mask ia = ctx.interior(a);
                     if (!ctx.biopen_family().contains(ia))
                         return CheckOutcome::fail("(1) fails at A=" + set_str(sp, a));
                     if (ctx.biopen_family().contains(a) != (ia == a))
                         return CheckOutcome::fail("(2) fails at A=" + set_str(sp, a));
                     if (ctx.interior(ia) != ia)
                         return CheckOutcome::fail("(3) fails at A=" + set_str(sp, a));
                     if (!subset_of(ia, a))
                         return CheckOutcome::fail("(4) fails at A=" + set_str(sp, a));
                     for (Mask b = 0; b <= full; ++b) {
                         if (subset_of(a, b) && !subset_of(ia, ctx.interior(b)))
                             return CheckOutcome::fail("(5) fails at A=" + set_str(sp, a) +
                                                       ", B=" + set_str(sp, b));
                         if (!subset_of(ia | ctx.interior(b), ctx.interior(a | b)))
                             return CheckOutcome::fail("(6) fails at A=" + set_str(sp, a) +
                                                       ", B=" + set_str(sp, b));
                         if (!subset_of(ctx.interior(a & b), ia & ctx.interior(b)))
                             return CheckOutcome::fail("(7) fails at A=" + set_str(sp, a) +
                                                       ", B=" + set_str(sp, b));
                     }
                 }
                 return CheckOutcome::pass();
             });

    add_pair("C-P3.16", hard,
             "interior/closure complement dualities hold exactly",
             [](const OpPairInstance& inst) -> CheckOutcome {
                 const FiniteSpace& sp = inst.ctx->space();
                 const auto& ctx = *inst.ctx;
                 return for_all_subsets(sp, [&](Mask a) -> std::optional<std::string> {
                     const Mask ca = sp.complement(a);
                     if (sp.complement(ctx.interior(a)) != ctx.closure_lattice(ca))
                         return "(1) fails at A=" + set_str(sp, a);
                     if (sp.complement(ctx.closure_lattice(a)) != ctx.interior(ca))
                         return "(2) fails at A=" + set_str(sp, a);
                     if (ctx.interior(a) != sp.complement(ctx.closure_lattice(ca)))
                         return "(3) fails at A=" + set_str(sp, a);
                     if (ctx.closure_lattice(a) != sp.complement(ctx.interior(ca)))
                         return "(4) fails at A=" + set_str(sp, a);
                     return std::nullopt;
                 });
             });

    add_pair("C-T3.1", hard,
             "bi-openness of A, pointwise and lattice fixed-point tests on X\\A, and "
             "bi-closedness of X\\A all agree",
             [](const OpPairInstance& inst) -> CheckOutcome {
                 const FiniteSpace& sp = inst.ctx->space();
                 const auto& ctx = *inst.ctx;
                 return for_all_subsets(sp, [&](Mask a) -> std::optional<std::string> {
                     const Mask ca = sp.complement(a);
                     const bool s1 = ctx.is_biopen(a);
                     const bool s2 = ctx.closure_pointwise(ca) == ca;
                     const bool s3 = ctx.closure_lattice(ca) == ca;
                     const bool s4 = ctx.biclosed_family().contains(ca);
                     if (s1 != s2 || s2 != s3 || s3 != s4)
                         return "A=" + set_str(sp, a) + ": (" + (s1 ? "1" : "-") +
                                (s2 ? "2" : "-") + (s3 ? "3" : "-") + (s4 ? "4" : "-") +
                                ") disagree";
                     return std::nullopt;
                 });
             });

    add_pair("C-T3.2a", paper,
             "on an e*_[gamma,gamma']-regular space the e*-closure, pointwise and lattice "
             "closures coincide",
             [](const OpPairInstance& inst) -> CheckOutcome {
                 if (!inst.ctx->is_regular_space()) return CheckOutcome::skip();
                 const FiniteSpace& sp = inst.ctx->space();
                 return for_all_subsets(sp, [&](Mask a) -> std::optional<std::string> {
                     const Mask e = sp.estar_closure(a);
                     const Mask p = inst.ctx->closure_pointwise(a);
                     const Mask l = inst.ctx->closure_lattice(a);
                     if (e != p || p != l)
                         return "A=" + set_str(sp, a) + ": e*Cl=" + set_str(sp, e) +
                                ", pointwise=" + set_str(sp, p) + ", lattice=" + set_str(sp, l);
                     return std::nullopt;
                 });
             });

    add_pair("C-T3.2b", paper, "the pointwise closure always lands on an e*-closed set",
             [](const OpPairInstance& inst) -> CheckOutcome {
                 const FiniteSpace& sp = inst.ctx->space();
                 return for_all_subsets(sp, [&](Mask a) -> std::optional<std::string> {
                     const Mask p = inst.ctx->closure_pointwise(a);
                     if (!sp.estar_closeds().contains(p))
                         return "A=" + set_str(sp, a) + ": pointwise closure " + set_str(sp, p) +
                                " is not e*-closed";
                     return std::nullopt;
                 });
             });

    add_pair("C-T3.3", hard,
             "for e*-open operations the two bi-closures coincide and the pointwise "
             "closure is idempotent",
             [](const OpPairInstance& inst) -> CheckOutcome {
                 if (!is_estar_open_operation(inst.ctx->gamma()) ||
                     !is_estar_open_operation(inst.ctx->gamma_prime()))
                     return CheckOutcome::skip();
                 const FiniteSpace& sp = inst.ctx->space();
                 return for_all_subsets(sp, [&](Mask a) -> std::optional<std::string> {
                     const Mask p = inst.ctx->closure_pointwise(a);
                     if (p != inst.ctx->closure_lattice(a))
                         return "A=" + set_str(sp, a) + ": closures differ";
                     if (inst.ctx->closure_pointwise(p) != p)
                         return "A=" + set_str(sp, a) + ": pointwise closure not idempotent";
                     return std::nullopt;
                 });
             });

    add_pair("C-T3.4", hard,
             "pointwise-closure laws: extensive, empty/whole fixed, bi-closed fixed "
             "points, monotone, single-operation union bound, union additivity for "
             "regular pairs, intersection bound",
             [](const OpPairInstance& inst) -> CheckOutcome {
                 const FiniteSpace& sp = inst.ctx->space();
                 const auto& ctx = *inst.ctx;
                 const Mask full = sp.universe();
                 const bool regular_ops = is_estar_regular(ctx.gamma()) &&
                                          is_estar_regular(ctx.gamma_prime());
                 if (ctx.closure_pointwise(0) != 0 || ctx.closure_pointwise(full) != full)
                     return CheckOutcome::fail("(2) fails");
                 for (Mask a = 0; a <= full; ++a) {
                     const Mask pa = ctx.closure_pointwise(a);
                     if (!subset_of(a, pa))
                         return CheckOutcome::fail("(1) fails at A=" + set_str(sp, a));
                     if (ctx.biclosed_family().contains(a) != (pa == a))
                         return CheckOutcome::fail("(3) fails at A=" + set_str(sp, a));
                     const Mask comp = full & ~a;
                     for (Mask s = comp;; s = (s - 1) & comp) {
                         if (!subset_of(pa, ctx.closure_pointwise(a | s)))
                             return CheckOutcome::fail("(4) fails at A=" + set_str(sp, a) +
                                                       ", B=" + set_str(sp, a | s));
                         if (s == 0) break;
                     }
                     for (Mask b = 0; b <= full; ++b) {
                         if (!subset_of(ctx.closure_pointwise(a | b),
                                        single_op_closure(ctx.gamma(), a) |
                                            single_op_closure(ctx.gamma_prime(), b)))
                             return CheckOutcome::fail("(5) fails at A=" + set_str(sp, a) +
                                                       ", B=" + set_str(sp, b));
                         if (regular_ops &&
                             ctx.closure_pointwise(a | b) !=
                                 (pa | ctx.closure_pointwise(b)))
                             return CheckOutcome::fail("(6) fails at A=" + set_str(sp, a) +
                                                       ", B=" + set_str(sp, b));
                         if (!subset_of(ctx.closure_pointwise(a & b),
                                        pa & ctx.closure_pointwise(b)))
                             return CheckOutcome::fail("(7) fails at A=" + set_str(sp, a) +
                                                       ", B=" + set_str(sp, b));
                     }
                 }
                 return CheckOutcome::pass();
             });

    add_space("C-R3.3", paper,
              "with the identity pair, the bi-open family is exactly e*O",
              [](const SpacePtr& spp) -> CheckOutcome {
                  auto id_op = identity_on(spp);
                  auto ctx = make_context(id_op, id_op);
                  if (!(ctx->biopen_family() == spp->estar_opens())) {
                      std::string delta;
                      for (Mask a : ctx->biopen_family().members())
                          if (!spp->estar_opens().contains(a)) {
                              delta = "witness " + spp->set_name(a) +
                                      " bi-open under the identity pair but not e*-open";
                              break;
                          }
                      if (delta.empty()) delta = "e*O member missing from the bi-open family";
                      return CheckOutcome::fail(delta);
                  }
                  return CheckOutcome::pass();
              });

    add_pair("C-R3.4", hard,
             "single-operation families: e*O_id = e*O and e*O_gamma always inside e*O",
             [](const OpPairInstance& inst) -> CheckOutcome {
                 const FiniteSpace& sp = inst.ctx->space();
                 auto id_op = identity_on(inst.ctx->space_ptr());
                 if (!(single_op_open_family(*id_op) == sp.estar_opens()))
                     return CheckOutcome::fail("e*O_id differs from e*O");
                 for (Mask a : single_op_open_family(inst.ctx->gamma()).members())
                     if (!sp.is_estar_open(a))
                         return CheckOutcome::fail("e*_gamma-open set outside e*O: " +
                                                   set_str(sp, a));
                 return CheckOutcome::pass();
             });

    add_pair("C-R3.5", hard,
             "gamma'=X reductions: lattice closure reduces to the single-operation "
             "lattice closure and pointwise closure reduces to e*Cl_gamma",
             [](const OpPairInstance& inst) -> CheckOutcome {
                 const FiniteSpace& sp = inst.ctx->space();
                 auto reduced = with_constant_x(*inst.ctx);
                 const SetFamily single = single_op_open_family(inst.ctx->gamma());
                 const SetFamily single_closed = single.complements("e*C_gamma");
                 return for_all_subsets(sp, [&](Mask a) -> std::optional<std::string> {
                     if (reduced->closure_pointwise(a) != single_op_closure(inst.ctx->gamma(), a))
                         return "(3) fails at A=" + set_str(sp, a);
                     Mask expect = sp.universe();
                     for (Mask f : single_closed.members())
                         if (subset_of(a, f)) expect &= f;
                     if (reduced->closure_lattice(a) != expect)
                         return "(1) fails at A=" + set_str(sp, a);
                     return std::nullopt;
                 });
             });

    // -- section 4 ------------------------------------------------------------

    add_morphism("C-T4.1", hard,
                 "continuity chain: (1)=>(2), (2)<=>(3), (3)=>(4), (4)<=>(5)<=>(6)<=>(7)",
                 [](const MorphismInstance& inst) -> CheckOutcome {
                     const auto v = continuity_conditions(*inst.f, *inst.dom, *inst.cod);
                     auto bad = [&](const std::string& what) {
                         std::string vec;
                         for (int i = 0; i < 7; ++i) vec += v.ok[i] ? '1' : '0';
                         return CheckOutcome::fail(what + " (vector " + vec + ")");
                     };
                     if (v.c(1) && !v.c(2)) return bad("(1) holds but (2) fails");
                     if (v.c(2) != v.c(3)) return bad("(2) and (3) disagree");
                     if (v.c(3) && !v.c(4)) return bad("(3) holds but (4) fails");
                     if (v.c(4) != v.c(5)) return bad("(4) and (5) disagree");
                     if (v.c(5) != v.c(6)) return bad("(5) and (6) disagree");
                     if (v.c(6) != v.c(7)) return bad("(6) and (7) disagree");
                     return CheckOutcome::pass();
                 });

    add_morphism("C-C4.1a", paper,
                 "if the codomain space is bi-regular, all seven continuity conditions agree",
                 [](const MorphismInstance& inst) -> CheckOutcome {
                     if (!inst.cod->is_regular_space()) return CheckOutcome::skip();
                     const auto v = continuity_conditions(*inst.f, *inst.dom, *inst.cod);
                     if (!v.all_agree()) {
                         std::string vec;
                         for (int i = 0; i < 7; ++i) vec += v.ok[i] ? '1' : '0';
                         return CheckOutcome::fail("conditions disagree (vector " + vec + ")");
                     }
                     return CheckOutcome::pass();
                 });

    add_morphism("C-C4.1b", hard,
                 "if beta and beta' are e*-open operations, all seven continuity "
                 "conditions agree",
                 [](const MorphismInstance& inst) -> CheckOutcome {
                     if (!is_estar_open_operation(inst.cod->gamma()) ||
                         !is_estar_open_operation(inst.cod->gamma_prime()))
                         return CheckOutcome::skip();
                     const auto v = continuity_conditions(*inst.f, *inst.dom, *inst.cod);
                     if (!v.all_agree()) {
                         std::string vec;
                         for (int i = 0; i < 7; ++i) vec += v.ok[i] ? '1' : '0';
                         return CheckOutcome::fail("conditions disagree (vector " + vec + ")");
                     }
                     return CheckOutcome::pass();
                 });

    add_morphism("C-P4.1", hard,
                 "for a bi-closed map, V = Y\\f(X\\U) is a bi-open set with B inside V "
                 "and preimage(V) inside U",
                 [](const MorphismInstance& inst) -> CheckOutcome {
                     if (!is_bi_closed_map(*inst.f, *inst.dom, *inst.cod))
                         return CheckOutcome::skip();
                     const FiniteSpace& X = inst.f->domain();
                     const FiniteSpace& Y = inst.f->codomain();
                     for (Mask b = 0; b <= Y.universe(); ++b) {
                         for (Mask u : inst.dom->biopen_family().members()) {
                             if (!subset_of(inst.f->preimage(b), u)) continue;
                             const Mask v = Y.universe() & ~inst.f->image(X.universe() & ~u);
                             if (!subset_of(b, v) || !subset_of(inst.f->preimage(v), u) ||
                                 !inst.cod->biopen_family().contains(v))
                                 return CheckOutcome::fail(
                                     "B=" + Y.set_name(b) + ", U=" + X.set_name(u) +
                                     ": V=" + Y.set_name(v) + " violates a postcondition");
                         }
                     }
                     return CheckOutcome::pass();
                 });

    add_morphism("C-P4.2", hard,
                 "a bijection whose inverse is bi-continuous is a bi-closed map",
                 [](const MorphismInstance& inst) -> CheckOutcome {
                     if (!inst.f->is_bijective()) return CheckOutcome::skip();
                     const FiniteFunction inv = inst.f->inverse();
                     if (!is_bi_continuous(inv, *inst.cod, *inst.dom)) return CheckOutcome::skip();
                     ClosedMapWitness w;
                     if (!is_bi_closed_map(*inst.f, *inst.dom, *inst.cod, &w))
                         return CheckOutcome::fail("image of bi-closed " +
                                                   inst.f->domain().set_name(w.set) +
                                                   " is not bi-closed");
                     return CheckOutcome::pass();
                 });

    {
        Claim c;
        c.id = "C-T4.2";
        c.kind = hard;
        c.statement = "bi-continuity composes";
        c.target = Claim::Target::triple;
        c.check_triple = [](const TripleInstance& inst) -> CheckOutcome {
            if (!is_bi_continuous(*inst.f, *inst.cx, *inst.cy) ||
                !is_bi_continuous(*inst.g, *inst.cy, *inst.cz))
                return CheckOutcome::skip();
            const FiniteFunction gf = compose(*inst.f, *inst.g);
            ContinuityWitness w;
            if (!is_bi_continuous(gf, *inst.cx, *inst.cz, Def41Reading::resolved, &w))
                return CheckOutcome::fail("composition not bi-continuous: " + w.detail);
            return CheckOutcome::pass();
        };
        reg.push_back(std::move(c));
    }

    return reg;
}

// ---------------------------------------------------------------------------
// Shrinking
// ---------------------------------------------------------------------------

std::vector<std::pair<Mask, Mask>> table_of(const BoundOperation& op) {
    std::vector<std::pair<Mask, Mask>> t;
    for (Mask v : op.space().estar_opens().members()) t.emplace_back(v, op.apply(v));
    return t;
}

Mask compress_mask(Mask m, Mask keep) {
    Mask out = 0;
    int pos = 0;
    for (int i = 0; i < kMaxPoints; ++i) {
        if (!has_point(keep, i)) continue;
        if (has_point(m, i)) out |= Mask{1} << pos;
        ++pos;
    }
    return out;
}

Mask embed_mask(Mask m, Mask keep) {
    Mask out = 0;
    int pos = 0;
    for (int i = 0; i < kMaxPoints; ++i) {
        if (!has_point(keep, i)) continue;
        if (has_point(m, pos)) out |= Mask{1} << i;
        ++pos;
    }
    return out;
}

std::optional<OpPairInstance> drop_point_pair(const OpPairInstance& inst, int p) {
    const FiniteSpace& sp = inst.ctx->space();
    if (sp.point_count() <= 1) return std::nullopt;
    const Mask keep = sp.universe() & ~(Mask{1} << p);

    std::vector<std::string> names;
    for (int i = 0; i < sp.point_count(); ++i)
        if (i != p) names.push_back(sp.points()[i]);
    std::vector<Mask> opens;
    for (Mask u : sp.opens()) opens.push_back(compress_mask(u & keep, keep));
    SpacePtr sub = make_space(std::move(names), std::move(opens));

    auto restrict_op = [&](const BoundOperation& op) {
        std::vector<std::pair<Mask, Mask>> t;
        for (Mask v : sub->estar_opens().members()) {
            const Mask vp = embed_mask(v, keep);
            Mask img = v;
            if (sp.is_estar_open(vp)) img = v | compress_mask(op.apply(vp) & keep, keep);
            t.emplace_back(v, img);
        }
        return bind_operation(sub, OperationSpec::from_table(std::move(t)));
    };

    OpPairInstance out;
    out.ctx = make_context(restrict_op(inst.ctx->gamma()), restrict_op(inst.ctx->gamma_prime()));
    out.provenance = inst.provenance + ";shrunk(drop-point=" + sp.points()[p] + ")";
    return out;
}

OpPairInstance shrink_pair(const Claim& claim, OpPairInstance inst) {
    auto still_fails = [&](const OpPairInstance& cand) {
        const auto o = claim.check_pair(cand);
        return !o.vacuous && o.failure.has_value();
    };

    int budget = 400;
    bool progress = true;
    while (progress && budget > 0) {
        progress = false;
        for (int p = 0; p < inst.ctx->space().point_count() && budget > 0; ++p) {
            auto cand = drop_point_pair(inst, p);
            if (!cand) continue;
            --budget;
            if (still_fails(*cand)) {
                inst = *cand;
                progress = true;
                break;
            }
        }
        if (progress) continue;

        for (int side = 0; side < 2 && budget > 0; ++side) {
            const BoundOperation& op = side == 0 ? inst.ctx->gamma() : inst.ctx->gamma_prime();
            auto table = table_of(op);
            for (std::size_t e = 0; e < table.size() && budget > 0; ++e) {
                if (table[e].second == table[e].first) continue;
                auto trial = table;
                trial[e].second = trial[e].first;
                auto rebound = bind_operation(inst.ctx->space_ptr(),
                                              OperationSpec::from_table(trial));
                OpPairInstance cand;
                cand.ctx = side == 0
                               ? make_context(rebound, std::make_shared<const BoundOperation>(
                                                           inst.ctx->gamma_prime()))
                               : make_context(std::make_shared<const BoundOperation>(
                                                  inst.ctx->gamma()),
                                              rebound);
                cand.provenance = inst.provenance + ";shrunk(op" +
                                  (side == 0 ? "=gamma" : "=gamma'") + "->id@" +
                                  inst.ctx->space().set_name(table[e].first) + ")";
                --budget;
                if (still_fails(cand)) {
                    inst = cand;
                    table = trial;
                    progress = true;
                }
            }
        }
    }
    return inst;
}

MorphismInstance shrink_morphism(const Claim& claim, MorphismInstance inst) {
    auto still_fails = [&](const MorphismInstance& cand) {
        const auto o = claim.check_morphism(cand);
        return !o.vacuous && o.failure.has_value();
    };
    int budget = 200;
    bool progress = true;
    while (progress && budget > 0) {
        progress = false;
        for (int slot = 0; slot < 4 && budget > 0; ++slot) {
            const bool domain_side = slot < 2;
            const BiopContextPtr& ctx = domain_side ? inst.dom : inst.cod;
            const BoundOperation& op =
                (slot % 2 == 0) ? ctx->gamma() : ctx->gamma_prime();
            auto table = table_of(op);
            for (std::size_t e = 0; e < table.size() && budget > 0; ++e) {
                if (table[e].second == table[e].first) continue;
                auto trial = table;
                trial[e].second = trial[e].first;
                auto rebound =
                    bind_operation(ctx->space_ptr(), OperationSpec::from_table(trial));
                auto other = std::make_shared<const BoundOperation>(
                    (slot % 2 == 0) ? ctx->gamma_prime() : ctx->gamma());
                auto new_ctx = (slot % 2 == 0) ? make_context(rebound, other)
                                               : make_context(other, rebound);
                MorphismInstance cand = inst;
                (domain_side ? cand.dom : cand.cod) = new_ctx;
                cand.provenance = inst.provenance + ";shrunk(op-slot=" + std::to_string(slot) + ")";
                --budget;
                if (still_fails(cand)) {
                    inst = cand;
                    table = trial;
                    progress = true;
                }
            }
        }
    }
    return inst;
}

}  // namespace

const std::vector<Claim>& claim_registry() {
    static const std::vector<Claim> registry = build_registry();
    return registry;
}

const Claim& find_claim(const std::string& id) {
    for (const Claim& c : claim_registry())
        if (c.id == id) return c;
    fail(Errc::unknown_claim, "unknown claim id: " + id);
}

ClaimReport run_claim(const Claim& claim, const Corpus& corpus, const RunOptions& options) {
    ClaimReport report;
    report.id = claim.id;
    report.kind = claim.kind;
    report.statement = claim.statement;

    // Evaluate over the matching instance list; results are collected per
    // index so the report is schedule-independent.
    auto evaluate = [&](std::size_t count, auto check_at, auto provenance_at) {
        std::vector<CheckOutcome> results(count);
        parallel_for(count, options.threads,
                     [&](std::size_t i) { results[i] = check_at(i); });
        std::optional<std::size_t> first_failure;
        for (std::size_t i = 0; i < count; ++i) {
            ++report.tested;
            if (!results[i].vacuous) ++report.non_vacuous;
            if (results[i].failure && !first_failure) first_failure = i;
        }
        if (first_failure) {
            report.all_hold = false;
            report.witness = Counterexample{*results[*first_failure].failure,
                                            provenance_at(*first_failure)};
        }
        return first_failure;
    };

    switch (claim.target) {
        case Claim::Target::space: {
            evaluate(
                corpus.spaces.size(), [&](std::size_t i) { return claim.check_space(corpus.spaces[i]); },
                [&](std::size_t i) {
                    return "space(points=" + std::to_string(corpus.spaces[i]->point_count()) +
                           ",index=" + std::to_string(i) + ")";
                });
            break;
        }
        case Claim::Target::op_pair: {
            auto idx = evaluate(
                corpus.op_pairs.size(),
                [&](std::size_t i) { return claim.check_pair(corpus.op_pairs[i]); },
                [&](std::size_t i) { return corpus.op_pairs[i].provenance; });
            if (idx && options.shrink) {
                OpPairInstance min = shrink_pair(claim, corpus.op_pairs[*idx]);
                const auto o = claim.check_pair(min);
                if (o.failure)
                    report.minimized = Counterexample{*o.failure, min.provenance};
            }
            break;
        }
        case Claim::Target::morphism: {
            auto idx = evaluate(
                corpus.morphisms.size(),
                [&](std::size_t i) { return claim.check_morphism(corpus.morphisms[i]); },
                [&](std::size_t i) { return corpus.morphisms[i].provenance; });
            if (idx && options.shrink) {
                MorphismInstance min = shrink_morphism(claim, corpus.morphisms[*idx]);
                const auto o = claim.check_morphism(min);
                if (o.failure)
                    report.minimized = Counterexample{*o.failure, min.provenance};
            }
            break;
        }
        case Claim::Target::triple: {
            evaluate(
                corpus.triples.size(),
                [&](std::size_t i) { return claim.check_triple(corpus.triples[i]); },
                [&](std::size_t i) { return corpus.triples[i].provenance; });
            break;
        }
    }
    return report;
}

}  // namespace estarlab
