#include "estarlab/examples.hpp"

namespace estarlab::examples {

namespace {

PairFixture bundle(SpacePtr sp, OperationSpec g, OperationSpec gp) {
    PairFixture fx;
    fx.space = sp;
    fx.gamma = bind_operation(sp, std::move(g));
    fx.gamma_prime = bind_operation(sp, std::move(gp));
    fx.ctx = make_context(fx.gamma, fx.gamma_prime);
    return fx;
}

}  // namespace

PairFixture ex_3_1() {
    auto sp = make_space({"w1", "w2", "w3"}, {0b000, 0b111, 0b010, 0b100, 0b011, 0b110});
    auto gamma = OperationSpec::piecewise(Condition::contains_point_of(2),
                                          OperationSpec::closure_op(), OperationSpec::constant_x());
    auto gamma_prime = OperationSpec::piecewise(Condition::equals(0b010),
                                                OperationSpec::constant_x(), OperationSpec::identity());
    return bundle(sp, std::move(gamma), std::move(gamma_prime));
}

PairFixture ex_3_3() {
    auto sp = make_space({"u1", "u2", "u3"}, {0b000, 0b111, 0b001});
    auto gamma = OperationSpec::constant_x();
    auto gamma_prime = OperationSpec::piecewise(Condition::equals(0b011),
                                                OperationSpec::identity(), OperationSpec::constant_x());
    return bundle(sp, std::move(gamma), std::move(gamma_prime));
}

PairFixture ex_3_5() {
    std::vector<Mask> all;
    for (Mask m = 0; m < 8; ++m) all.push_back(m);
    auto sp = make_space({"t1", "t2", "t3"}, all);
    auto op = OperationSpec::piecewise(Condition::member_of({0b011, 0b110}),
                                       OperationSpec::identity(), OperationSpec::constant_x());
    return bundle(sp, op, op);
}

PairFixture ex_post_3_6() {
    auto sp = make_space({"v1", "v2", "v3"}, {0b000, 0b111, 0b010});
    return bundle(sp, OperationSpec::identity(), OperationSpec::identity());
}

PairFixture ex_3_6() {
    auto sp = make_space({"z1", "z2", "z3"}, {0b000, 0b111, 0b001, 0b010, 0b011});
    return bundle(sp, OperationSpec::closure_op(), OperationSpec::constant_x());
}

MapFixture ex_4_1() {
    auto sp = make_space({"s1", "s2", "s3"}, {0b000, 0b111, 0b001, 0b010, 0b011});
    MapFixture fx;
    fx.space = sp;
    auto x_op = bind_operation(sp, OperationSpec::constant_x());
    auto cl_op = bind_operation(sp, OperationSpec::closure_op());
    fx.dom = make_context(x_op, x_op);
    fx.cod = make_context(cl_op, x_op);
    fx.f = std::make_shared<const FiniteFunction>(FiniteFunction::identity(sp));
    return fx;
}

MapFixture ex_4_2() {
    auto sp = make_space({"s1", "s2", "s3"}, {0b000, 0b111, 0b001, 0b010, 0b011});
    MapFixture fx;
    fx.space = sp;
    auto cl_op = bind_operation(sp, OperationSpec::closure_op());
    auto x_op = bind_operation(sp, OperationSpec::constant_x());
    fx.dom = make_context(cl_op, x_op);
    fx.cod = make_context(cl_op, x_op);
    fx.f = std::make_shared<const FiniteFunction>(FiniteFunction(sp, sp, {1, 2, 0}));
    return fx;
}

}  // namespace estarlab::examples
