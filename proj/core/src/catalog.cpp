#include "takeuchi/catalog.hpp"

namespace takeuchi {

AlgebraPtr polynomial_algebra(const Field& k, const std::vector<std::string>& vars, int bound) {
    std::vector<std::string> rels;
    std::string name = "k[";
    for (std::size_t i = 0; i < vars.size(); ++i) {
        name += (i ? "," : "") + vars[i];
        for (std::size_t j = i + 1; j < vars.size(); ++j) rels.push_back(vars[j] + "*" + vars[i] + " - " + vars[i] + "*" + vars[j]);
    }
    return realize_shared(make_presentation(k, vars, rels, bound, name + "]"));
}

AlgebraPtr quantum_plane(const Field& k, const Scalar& q, int bound, const std::string& x, const std::string& y) {
    Presentation p = make_presentation(k, {x, y}, {}, bound, "k_q[" + x + "," + y + "]");
    const Scalar qq = k.coerce(q);
    p.relations.push_back({{k.one(), {1, 0}}, {-qq, {0, 1}}});
    return realize_shared(p);
}

AlgebraPtr dual_numbers(const Field& k, int bound) {
    return realize_shared(make_presentation(k, {"x"}, {"x^2"}, bound, "k<x>/(x^2)"));
}

std::size_t multiplicative_order(const Field& k, const Scalar& q, std::size_t limit) {
    const Scalar qq = k.coerce(q);
    if (qq.is_zero()) return 0;
    Scalar p = qq;
    for (std::size_t n = 1; n <= limit; ++n) {
        if (p.is_one()) return n;
        p *= qq;
    }
    return 0;
}

SmashDatum quantum_plane_datum(const Field& k, const Scalar& q, int bound) {
    const std::size_t n = multiplicative_order(k, q);
    if (n == 0) throw AlgebraError("q must be a root of unity in the field");
    auto h = finalize_hopf(cyclic_group_algebra(k, n));
    auto a = polynomial_algebra(k, {"x"}, bound);
    auto b = polynomial_algebra(k, {"y"}, bound);
    GroupTable g = cyclic_group_table(n);
    auto t = cyclic_bicharacter(k, n, n, q);
    SmashDatum s{"quantum plane q=" + k.coerce(q).to_string(), h, bicharacter_action(h, a, g, g, t, {1}),
                 bicharacter_coaction(h, b, {1})};
    return s;
}

SmashDatum skew_group_datum(const Field& k, int bound) {
    auto h = finalize_hopf(cyclic_group_algebra(k, 2));
    auto a = polynomial_algebra(k, {"x"}, bound);
    std::vector<std::vector<Vec>> images{{Vec{k.one()}}, {Vec{-k.one()}}};
    auto b = hopf_as_algebra(h, bound);
    return SmashDatum{"skew group k[x]#kC2", h, extend_action(h, a, images), regular_coaction(h, b)};
}

SmashDatum trivial_datum(const AlgebraPtr& a, const AlgebraPtr& b) {
    auto h = finalize_hopf(trivial_hopf(a->field()));
    return SmashDatum{a->name() + " (x) " + b->name(), h, trivial_action(h, a), trivial_coaction(h, b)};
}

OreExtension scaled_ore_extension(const Field& k, const Scalar& s, int bound) {
    auto a = polynomial_algebra(k, {"u"}, bound);
    return ore_extension(a, {Vec{k.coerce(s)}}, {Vec{k.zero()}}, bound, "x");
}

}  // namespace takeuchi
