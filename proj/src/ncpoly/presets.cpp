// built-in presentations

#include "qbundle/ncpoly.hpp"

namespace qb {

namespace {

Vec term(const Word& w, const Scalar& c) { return Vec{{w, c}}; }

Vec sum(std::initializer_list<Vec> parts) {
    Vec out;
    for (auto& p : parts) axpy(out, Scalar(1), p);
    return out;
}

Word W(std::initializer_list<int> idx) {
    Word w;
    for (int i : idx) w.push_back(static_cast<char>(i));
    return w;
}

}  // namespace

PresentationPtr preset_suq2() { return preset_suq2(Scalar::q()); }

PresentationPtr preset_suq2(const Scalar& q) {
    enum { b, c, a, d };
    Scalar qi = q.inverse();
    std::vector<Rule> rules{
        {W({a, b}), term(W({b, a}), q)},
        {W({a, c}), term(W({c, a}), q)},
        {W({c, b}), term(W({b, c}), Scalar(1))},
        {W({d, b}), term(W({b, d}), qi)},
        {W({d, c}), term(W({c, d}), qi)},
        {W({a, d}), sum({term(W({}), Scalar(1)), term(W({b, c}), q)})},
        {W({d, a}), sum({term(W({}), Scalar(1)), term(W({b, c}), qi)})},
    };
    auto p = std::make_shared<Presentation>(std::vector<std::string>{"b", "c", "a", "d"}, std::vector<int>{1, 1, 1, 1},
                                            std::move(rules));
    auto pp = [](int x, int y) { return Tensor::Index{W({x}), W({y})}; };
    HopfData h;
    h.coproduct.resize(4, Tensor("PP"));
    h.coproduct[a].add(pp(a, a), Scalar(1));
    h.coproduct[a].add(pp(b, c), Scalar(1));
    h.coproduct[b].add(pp(a, b), Scalar(1));
    h.coproduct[b].add(pp(b, d), Scalar(1));
    h.coproduct[c].add(pp(c, a), Scalar(1));
    h.coproduct[c].add(pp(d, c), Scalar(1));
    h.coproduct[d].add(pp(c, b), Scalar(1));
    h.coproduct[d].add(pp(d, d), Scalar(1));
    h.counit = {Scalar(0), Scalar(0), Scalar(1), Scalar(1)};
    h.antipode = {term(W({b}), -qi), term(W({c}), -q), term(W({d}), Scalar(1)), term(W({a}), Scalar(1))};
    h.antipode_inv = {term(W({b}), -q), term(W({c}), -qi), term(W({d}), Scalar(1)), term(W({a}), Scalar(1))};
    p->set_hopf(std::move(h));
    return p;
}

PresentationPtr preset_group_algebra(int n) {
    if (n < 2) throw std::invalid_argument("group algebra order must be at least 2");
    std::vector<Rule> rules{{Word(static_cast<std::size_t>(n), '\0'), term(Word(), Scalar(1))}};
    auto p = std::make_shared<Presentation>(std::vector<std::string>{"g"}, std::vector<int>{1}, std::move(rules));
    HopfData h;
    h.coproduct = {Tensor::pure("PP", {W({0}), W({0})})};
    h.counit = {Scalar(1)};
    h.antipode = {term(Word(static_cast<std::size_t>(n - 1), '\0'), Scalar(1))};
    h.antipode_inv = h.antipode;
    p->set_hopf(std::move(h));
    return p;
}

PresentationPtr preset_quaternions() {
    enum { i, j, k };
    Scalar one(1), m1(-1);
    std::vector<Rule> rules{
        {W({i, i}), term(W({}), m1)},  {W({j, j}), term(W({}), m1)}, {W({k, k}), term(W({}), m1)},
        {W({i, j}), term(W({k}), one)}, {W({j, i}), term(W({k}), m1)}, {W({j, k}), term(W({i}), one)},
        {W({k, j}), term(W({i}), m1)},  {W({k, i}), term(W({j}), one)}, {W({i, k}), term(W({j}), m1)},
    };
    return std::make_shared<Presentation>(std::vector<std::string>{"i", "j", "k"}, std::vector<int>{1, 1, 1},
                                          std::move(rules));
}

PresentationPtr preset_zn_times_zn(int n) {
    if (n < 2) throw std::invalid_argument("order must be at least 2");
    enum { g, h };
    std::vector<Rule> rules{
        {W({h, g}), term(W({g, h}), Scalar::zeta(n))},
        {Word(static_cast<std::size_t>(n), static_cast<char>(g)), term(W({}), Scalar(1))},
        {Word(static_cast<std::size_t>(n), static_cast<char>(h)), term(W({}), Scalar(1))},
    };
    return std::make_shared<Presentation>(std::vector<std::string>{"g", "h"}, std::vector<int>{1, 1},
                                          std::move(rules));
}

PresentationPtr preset(const std::string& name, int n) {
    if (name == "suq2") return preset_suq2();
    if (name == "group_algebra") return preset_group_algebra(n);
    if (name == "quaternions") return preset_quaternions();
    if (name == "zn_times_zn") return preset_zn_times_zn(n);
    throw std::invalid_argument("unknown preset '" + name + "'");
}

}  // namespace qb
