#include "estarlab/operation.hpp"

#include <algorithm>

#include "estarlab/errors.hpp"

namespace estarlab {

Condition Condition::contains_point_of(int p) {
    Condition c;
    c.kind = Kind::contains_point;
    c.point = p;
    return c;
}

Condition Condition::equals(Mask s) {
    Condition c;
    c.kind = Kind::equals_set;
    c.set = s;
    return c;
}

Condition Condition::member_of(std::vector<Mask> sets) {
    Condition c;
    c.kind = Kind::member_of;
    std::sort(sets.begin(), sets.end());
    c.list = std::move(sets);
    return c;
}

bool Condition::eval(Mask v) const {
    switch (kind) {
        case Kind::contains_point: return has_point(v, point);
        case Kind::equals_set: return v == set;
        case Kind::member_of: return std::binary_search(list.begin(), list.end(), v);
    }
    return false;
}

OperationSpec OperationSpec::identity() {
    OperationSpec s;
    s.kind = Kind::identity;
    return s;
}

OperationSpec OperationSpec::constant_x() {
    OperationSpec s;
    s.kind = Kind::constant_x;
    return s;
}

OperationSpec OperationSpec::closure_op() {
    OperationSpec s;
    s.kind = Kind::closure_op;
    return s;
}

OperationSpec OperationSpec::from_table(std::vector<std::pair<Mask, Mask>> entries) {
    OperationSpec s;
    s.kind = Kind::table;
    std::sort(entries.begin(), entries.end());
    s.table = std::move(entries);
    return s;
}

OperationSpec OperationSpec::piecewise(Condition c, OperationSpec then_spec, OperationSpec else_spec) {
    OperationSpec s;
    s.kind = Kind::piecewise;
    s.cond = std::move(c);
    s.children.push_back(std::move(then_spec));
    s.children.push_back(std::move(else_spec));
    return s;
}

Mask resolve(const OperationSpec& spec, const FiniteSpace& space, Mask v) {
    switch (spec.kind) {
        case OperationSpec::Kind::identity: return v;
        case OperationSpec::Kind::constant_x: return space.universe();
        case OperationSpec::Kind::closure_op: return space.closure(v);
        case OperationSpec::Kind::piecewise:
            return resolve(spec.cond.eval(v) ? spec.children[0] : spec.children[1], space, v);
        case OperationSpec::Kind::table: {
            auto it = std::lower_bound(spec.table.begin(), spec.table.end(), v,
                                       [](const auto& e, Mask key) { return e.first < key; });
            if (it == spec.table.end() || it->first != v)
                fail(Errc::table_incomplete,
                     "operation table has no entry for e*-open set " + space.set_name(v));
            return it->second;
        }
    }
    fail(Errc::parse_error, "unreachable operation kind");
}

BoundOperation::BoundOperation(SpacePtr space, OperationSpec spec)
    : space_(std::move(space)), spec_(std::move(spec)) {
    const FiniteSpace& sp = *space_;

    if (spec_.kind == OperationSpec::Kind::table) {
        for (const auto& [key, value] : spec_.table) {
            if (!sp.is_estar_open(key))
                fail(Errc::table_key_not_estar_open,
                     "table key " + sp.set_name(key) + " is not e*-open");
            if (!subset_of(value, sp.universe()))
                fail(Errc::width_exceeded, "table image exceeds the ground set");
        }
    }

    images_.assign(std::size_t{1} << sp.point_count(), 0);
    for (Mask v : sp.estar_opens().members()) {
        Mask img = resolve(spec_, sp, v);
        if (!subset_of(v, img))
            fail(Errc::not_expansive, "operation is not expansive on V=" + sp.set_name(v) +
                                          " (image " + sp.set_name(img) + ")");
        images_[v] = img;
    }

    min_images_.assign(sp.point_count(), {});
    for (int x = 0; x < sp.point_count(); ++x) {
        std::vector<Mask> imgs;
        for (Mask u : sp.estar_nbhds(x)) imgs.push_back(images_[u]);
        min_images_[x] = minimal_antichain(std::move(imgs));
    }
}

Mask BoundOperation::apply(Mask v) const {
    if (!space_->is_estar_open(v))
        fail(Errc::not_in_domain, "operation applied to a set outside e*O: " + space_->set_name(v));
    return images_[v];
}

OperationPtr bind_operation(SpacePtr space, OperationSpec spec) {
    return std::make_shared<const BoundOperation>(std::move(space), std::move(spec));
}

bool is_estar_regular(const BoundOperation& op, RegularityWitness* witness) {
    const FiniteSpace& sp = op.space();
    for (int x = 0; x < sp.point_count(); ++x) {
        const auto& nbhds = sp.estar_nbhds(x);
        for (Mask u : nbhds) {
            for (Mask v : nbhds) {
                const Mask target = op.apply(u) & op.apply(v);
                bool found = false;
                for (Mask m : op.min_images(x)) {
                    if (subset_of(m, target)) {
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    if (witness) *witness = {x, u, v};
                    return false;
                }
            }
        }
    }
    return true;
}

SetFamily single_op_open_family(const BoundOperation& op) {
    const FiniteSpace& sp = op.space();
    const Mask full = sp.universe();
    std::vector<Mask> members;
    for (Mask a = 0; a <= full; ++a) {
        bool ok = true;
        for (int x = 0; x < sp.point_count() && ok; ++x) {
            if (!has_point(a, x)) continue;
            bool refined = false;
            for (Mask m : op.min_images(x)) {
                if (subset_of(m, a)) {
                    refined = true;
                    break;
                }
            }
            ok = refined;
        }
        if (ok) members.push_back(a);
    }
    return SetFamily(sp.point_count(), std::move(members), "e*O_gamma");
}

bool is_estar_open_operation(const BoundOperation& op, OpennessWitness* witness) {
    const FiniteSpace& sp = op.space();
    const SetFamily fam = single_op_open_family(op);

    // Per point, the minimal e*_γ-open sets containing it.
    std::vector<std::vector<Mask>> min_fam(sp.point_count());
    for (int x = 0; x < sp.point_count(); ++x) {
        std::vector<Mask> around;
        for (Mask m : fam.members())
            if (has_point(m, x)) around.push_back(m);
        min_fam[x] = minimal_antichain(std::move(around));
    }

    for (int x = 0; x < sp.point_count(); ++x) {
        for (Mask u : sp.estar_nbhds(x)) {
            const Mask img = op.apply(u);
            bool found = false;
            for (Mask m : min_fam[x]) {
                if (subset_of(m, img)) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                if (witness) *witness = {x, u};
                return false;
            }
        }
    }
    return true;
}

bool is_estar_gamma_regular_space(const BoundOperation& op, SpaceRegularityWitness* witness) {
    const FiniteSpace& sp = op.space();
    for (int x = 0; x < sp.point_count(); ++x) {
        for (Mask v : sp.estar_nbhds(x)) {
            bool found = false;
            for (Mask m : op.min_images(x)) {
                if (subset_of(m, v)) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                if (witness) *witness = {x, v};
                return false;
            }
        }
    }
    return true;
}

Mask single_op_closure(const BoundOperation& op, Mask a) {
    const FiniteSpace& sp = op.space();
    Mask out = 0;
    for (int x = 0; x < sp.point_count(); ++x) {
        bool all_meet = true;
        for (Mask m : op.min_images(x)) {
            if ((m & a) == 0) {
                all_meet = false;
                break;
            }
        }
        if (all_meet) out |= Mask{1} << x;
    }
    return out;
}

}  // namespace estarlab
