#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modcx/algebra.hpp"

using namespace modcx;

namespace {

AlgebraSpec spec(std::vector<std::string> vars, std::vector<std::string> rels, int cap) {
    return {101, std::move(vars), std::move(rels), cap};
}

// independent oracle for the quotient dimension: count monomials of degree
// below cap, subtract the rank of all (monomial * relation) products
int quotient_dim_oracle(const AlgebraSpec& s) {
    std::vector<Polynomial> rels;
    for (const auto& t : s.relations) rels.push_back(Polynomial::parse(t, s.vars));
    // enumerate monomials of degree < cap as polynomials
    std::vector<Polynomial> monos{Polynomial::constant(1, s.vars.size())};
    std::vector<Polynomial> frontier = monos;
    for (int d = 1; d < s.cap; ++d) {
        std::vector<Polynomial> next;
        for (const auto& m : frontier)
            for (std::size_t j = 0; j < s.vars.size(); ++j)
                next.push_back(m * Polynomial::variable(j, s.vars.size()));
        for (const auto& m : next) monos.push_back(m);
        frontier = std::move(next);
    }
    // map exponent vectors to coordinates
    std::map<Exponents, int> index;
    for (const auto& m : monos)
        for (const auto& [e, c] : m.terms())
            if (!index.count(e)) index[e] = static_cast<int>(index.size());
    PrimeField f(s.prime);
    std::vector<Vec> rows;
    for (const auto& m : monos)
        for (const auto& r : rels) {
            Polynomial prod = m * r;
            Vec row(index.size(), 0);
            bool any = false;
            for (const auto& [e, c] : prod.terms()) {
                auto it = index.find(e);
                if (it == index.end()) continue;  // truncated degree
                row[it->second] = f.from_int(c);
                any = true;
            }
            if (any) rows.push_back(std::move(row));
        }
    int span = rows.empty() ? 0
                            : rank(Mat::from_rows(f, rows, static_cast<int>(index.size())));
    // distinct monomials of degree < cap
    std::set<Exponents> distinct;
    for (const auto& m : monos)
        for (const auto& [e, c] : m.terms()) distinct.insert(e);
    return static_cast<int>(distinct.size()) - span;
}

}  // namespace

TEST_CASE("build_algebra spec examples with the monomial-count oracle") {
    AlgebraSpec s1 = spec({"x"}, {"x^2"}, 3);
    ArtinAlgebra r1 = ArtinAlgebra::build(s1);
    CHECK(r1.dim() == 2);
    CHECK(r1.dim() == quotient_dim_oracle(s1));

    AlgebraSpec s2 = spec({"x", "y"}, {"x^2", "x*y", "y^2"}, 3);
    ArtinAlgebra r2 = ArtinAlgebra::build(s2);
    CHECK(r2.dim() == 3);
    CHECK(r2.dim() == quotient_dim_oracle(s2));
    CHECK(r2.socle_length() == 2);

    // unit ideal on the variable leaves the field
    ArtinAlgebra r3 = ArtinAlgebra::build(spec({"x"}, {"x"}, 2));
    CHECK(r3.dim() == 1);
    CHECK(r3.is_field());
    CHECK(r3.edim() == 0);
    CHECK(r3.socle_length() == 1);
}

TEST_CASE("cap too small is reported with the failing degree") {
    try {
        ArtinAlgebra::build(spec({"x"}, {}, 2));  // k[x]/m^2 vs m^3 differ
        FAIL("expected saturation failure");
    } catch (const input_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("cap too small") != std::string::npos);
        CHECK(msg.find("degree 2") != std::string::npos);
    }
}

TEST_CASE("relation validation") {
    CHECK_THROWS_AS(ArtinAlgebra::build(spec({"x"}, {"x^2 - 1"}, 3)), input_error);
    CHECK_THROWS_AS(ArtinAlgebra::build(spec({"x", "x"}, {"x^2"}, 2)), input_error);
    CHECK_THROWS_AS(ArtinAlgebra::build(spec({"x"}, {"x + * y"}, 2)), input_error);
    CHECK_THROWS_AS(ArtinAlgebra::build(spec({"x"}, {"y^2"}, 2)), input_error);
    CHECK_THROWS_AS(ArtinAlgebra::build({101, {"x"}, {"x^2"}, 0}), input_error);
}

TEST_CASE("normal form") {
    ArtinAlgebra r = ArtinAlgebra::build(spec({"x", "y"}, {"x^2", "y^2"}, 3));
    RingElement one = r.from_polynomial(Polynomial::parse("1", r.spec().vars));
    CHECK(one.coeffs == r.one().coeffs);

    ArtinAlgebra rx = ArtinAlgebra::build(spec({"x"}, {"x^2"}, 3));
    RingElement zero = parse_ring_element(rx, "x^2");
    CHECK(Vec(rx.dim(), 0) == zero.coeffs);

    // (x+y)^2 = 2xy in k[x,y]/(x^2, y^2)
    RingElement sq = parse_ring_element(r, "(x+y)^2");
    RingElement xy2 = parse_ring_element(r, "2*x*y");
    CHECK(sq.coeffs == xy2.coeffs);
}

TEST_CASE("ring multiplication") {
    ArtinAlgebra r = ArtinAlgebra::build(spec({"x"}, {"x^3"}, 4));
    RingElement x = parse_ring_element(r, "x");
    RingElement xx = r.mul(x, x);
    CHECK(xx.coeffs == parse_ring_element(r, "x^2").coeffs);
    RingElement a = parse_ring_element(r, "3 + 2*x + x^2");
    CHECK(r.mul(a, r.one()).coeffs == a.coeffs);
    // socle products vanish when m^2 = 0
    ArtinAlgebra m2 = ArtinAlgebra::build(spec({"x", "y"}, {"x^2", "x*y", "y^2"}, 2));
    RingElement u = parse_ring_element(m2, "x + 2*y");
    RingElement v = parse_ring_element(m2, "5*x + y");
    CHECK(m2.mul(u, v).coeffs == Vec(m2.dim(), 0));
}

TEST_CASE("radical powers and socle") {
    ArtinAlgebra r = ArtinAlgebra::build(spec({"x", "y"}, {"x^2", "y^2"}, 3));
    CHECK(r.radical_power(0).dim() == 4);
    CHECK(r.radical_power(1).dim() == 3);
    CHECK(r.radical_power(2).dim() == 1);
    CHECK(r.radical_power(3).dim() == 0);
    CHECK(r.m_power_lengths() == std::vector<int>{4, 3, 1, 0});

    ArtinAlgebra x3 = ArtinAlgebra::build(spec({"x"}, {"x^3"}, 4));
    IdealSubspace soc = x3.socle_ideal();
    CHECK(soc.dim() == 1);
    SpanBuilder span(x3.field(), x3.dim());
    span.add(soc.basis.col(0));
    CHECK(span.contains(parse_ring_element(x3, "x^2").coeffs));
    CHECK(x3.gorenstein());

    ArtinAlgebra m2 = ArtinAlgebra::build(spec({"x", "y"}, {"x^2", "x*y", "y^2"}, 2));
    CHECK(m2.socle_ideal().dim() == 2);
    CHECK_FALSE(m2.gorenstein());
}

TEST_CASE("ideal closure") {
    ArtinAlgebra r = ArtinAlgebra::build(spec({"x", "y"}, {"x^2", "y^2"}, 3));
    IdealSubspace whole = r.ideal_closure({r.one()});
    CHECK(whole.quotient_length() == 0);
    IdealSubspace zero = r.ideal_closure({});
    CHECK(zero.quotient_length() == r.dim());

    IdealSubspace ix = r.ideal_closure({parse_ring_element(r, "x")});
    CHECK(ix.dim() == 2);  // span{x, xy}
    CHECK(ix.quotient_length() == 2);
    SpanBuilder span(r.field(), r.dim());
    for (int c = 0; c < ix.basis.cols(); ++c) span.add(ix.basis.col(c));
    CHECK(span.contains(parse_ring_element(r, "x*y").coeffs));
}

TEST_CASE("actions commute and are nilpotent; filtration reaches zero") {
    for (auto vars : {std::vector<std::string>{"x", "y"}, {"x", "y", "z"}}) {
        std::vector<std::string> rels;
        for (std::size_t i = 0; i < vars.size(); ++i)
            for (std::size_t j = i; j < vars.size(); ++j)
                if (!(i == 0 && j == 0)) rels.push_back(vars[i] + "*" + vars[j]);
        rels.push_back(vars[0] + "^3");
        ArtinAlgebra r = ArtinAlgebra::build(spec(vars, rels, 4));
        for (int i = 0; i < r.nvars(); ++i)
            for (int j = 0; j < r.nvars(); ++j)
                CHECK(r.var_action(i).mul(r.var_action(j)) ==
                      r.var_action(j).mul(r.var_action(i)));
        CHECK(r.m_power_lengths().back() == 0);
        // strictly decreasing until zero
        const auto& ml = r.m_power_lengths();
        for (std::size_t i = 0; i + 1 < ml.size(); ++i)
            if (ml[i] != 0) CHECK(ml[i] > ml[i + 1]);
    }
}

TEST_CASE("saturation stability: rebuilding with a larger cap keeps the dimension") {
    AlgebraSpec s = spec({"x", "y"}, {"x^2", "y^2"}, 3);
    ArtinAlgebra r3 = ArtinAlgebra::build(s);
    s.cap = 5;
    ArtinAlgebra r5 = ArtinAlgebra::build(s);
    CHECK(r3.dim() == r5.dim());
    CHECK(r3.socle_length() == r5.socle_length());
}

TEST_CASE("non-graded relations are supported") {
    // x^2 = y^3 style inhomogeneous relation
    ArtinAlgebra r = ArtinAlgebra::build(spec({"x", "y"}, {"x^2 - y^3", "x*y", "y^4"}, 5));
    CHECK(r.dim() > 1);
    RingElement a = parse_ring_element(r, "x^2");
    RingElement b = parse_ring_element(r, "y^3");
    CHECK(a.coeffs == b.coeffs);
}

TEST_CASE("polynomial parser grammar") {
    std::vector<std::string> vars{"x", "y"};
    Polynomial p = Polynomial::parse("2*x^2 - 3*x*y + y - 7*y", vars);
    CHECK(p.to_string(vars) == "-6*y - 3*x*y + 2*x^2");
    CHECK(Polynomial::parse("0", vars).is_zero());
    CHECK(Polynomial::parse("x - x", vars).is_zero());
    CHECK(Polynomial::parse("-(x - y) - y + x", vars).is_zero());
    CHECK_THROWS_AS(Polynomial::parse("x +", vars), input_error);
    CHECK_THROWS_AS(Polynomial::parse("z", vars), input_error);
    CHECK_THROWS_AS(Polynomial::parse("x ^ y", vars), input_error);
    CHECK_THROWS_AS(Polynomial::parse("(x", vars), input_error);
}
