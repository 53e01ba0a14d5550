// Algebra-core tests: generator order, the straightening oracle, products,
// normal forms, degrees and the element grammar.

#include "yv/element.hpp"
#include "yv/parse.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace yv;

namespace {

GenSym T(int i, int j, int r) { return GenSym::yangian(1, i, j, r); }

Element parseY(const ContextPtr& ctx, const std::string& s) { return parse_element(ctx, s); }

// Independent single-swap oracle for length-2 words: applies the defining
// commutation rule exactly once, written without the engine's code paths.
Element single_swap_oracle(const ContextPtr& ctx, GenSym g, GenSym h) {
    if (!(h < g)) return Element::word(ctx, Word{g, h});
    Element out = Element::word(ctx, Word{h, g});
    const int i = g.i(), j = g.j(), r = g.level();
    const int hi = h.i(), hj = h.j(), s = h.level();
    for (int t = 0; t <= std::min(r, s) - 1; ++t) {
        const int top = r + s - 1 - t;
        if (t == 0) {
            if (hi == j) out += Element::gen(ctx, T(i, hj, top));
            if (i == hj) out -= Element::gen(ctx, T(hi, j, top));
        } else {
            out += Element::word(ctx, Word{T(i, hj, top), T(hi, j, t)});
            out -= Element::word(ctx, Word{T(i, hj, t), T(hi, j, top)});
        }
    }
    return out;
}

Word random_word(std::mt19937_64& rng, int n, int max_degree) {
    Word w;
    std::uniform_int_distribution<int> idx(1, n);
    int budget = max_degree;
    std::uniform_int_distribution<int> more(0, 2);
    while (budget > 0 && more(rng) > 0) {
        std::uniform_int_distribution<int> lev(1, budget);
        int r = lev(rng);
        w.push_back(T(idx(rng), idx(rng), r));
        budget -= r;
    }
    return w;
}

Element random_element(std::mt19937_64& rng, const ContextPtr& ctx, int n, int max_degree,
                       int nterms) {
    Element e(ctx);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int k = 0; k < nterms; ++k) {
        int c = coef(rng);
        if (c == 0) c = 1;
        e.add_term(random_word(rng, n, max_degree), Rational(c));
    }
    return e;
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical", "[core][rational]") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK(Rational::parse("3/2").str() == "3/2");
    CHECK(Rational::parse("-7").str() == "-7");
    CHECK(Rational::binomial(5, 2) == Rational(10));
    CHECK(Rational::binomial(3, 5) == Rational(0));
    CHECK(Rational(2, 3).inverse() == Rational(3, 2));
    CHECK(Rational(-1, 2).pow(3) == Rational(-1, 8));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(0).inverse(), std::invalid_argument);
}

TEST_CASE("generator order", "[core]") {
    auto y2 = AlgebraContext::yangian(2);
    auto u3 = AlgebraContext::tensor_enveloping(3, 2);

    CHECK(compare_generators(y2, T(1, 2, 1), T(2, 1, 1)) == Ordering::less);
    CHECK(compare_generators(y2, T(1, 1, 3), T(1, 1, 3)) == Ordering::equal);
    CHECK(compare_generators(u3, GenSym::enveloping(2, 1, 1), GenSym::enveloping(1, 3, 3)) ==
          Ordering::greater);
    // (i, j, r) lex within a slot
    CHECK(compare_generators(y2, T(1, 1, 5), T(1, 2, 1)) == Ordering::less);

    CHECK_THROWS_AS(compare_generators(y2, T(1, 1, 1), GenSym::enveloping(1, 1, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(compare_generators(y2, T(3, 1, 1), T(1, 1, 1)), std::invalid_argument);
}

TEST_CASE("straightening oracle", "[core]") {
    auto y2 = AlgebraContext::yangian(2);

    SECTION("gl_2 bracket at r = s = 1") {
        Element b = straighten_pair(y2, T(2, 1, 1), T(1, 2, 1));
        CHECK(b == parseY(y2, "T[2,2;1] - T[1,1;1]"));
    }
    SECTION("diagonal levels commute") {
        CHECK(straighten_pair(y2, T(1, 1, 1), T(1, 1, 2)).normal_form().is_zero());
    }
    SECTION("distinct tensor slots commute") {
        auto u2 = AlgebraContext::tensor_enveloping(2, 2);
        Element z = straighten_pair(u2, GenSym::enveloping(1, 1, 2), GenSym::enveloping(2, 2, 1));
        CHECK(z.is_zero());
    }
    SECTION("enveloping bracket") {
        auto u2 = AlgebraContext::tensor_enveloping(2, 1);
        Element b =
            straighten_pair(u2, GenSym::enveloping(1, 1, 2), GenSym::enveloping(1, 2, 1));
        Element expect = Element::gen(u2, GenSym::enveloping(1, 1, 1)) -
                         Element::gen(u2, GenSym::enveloping(1, 2, 2));
        CHECK(b == expect);
    }
    SECTION("antisymmetry: nf([g,h] + [h,g]) = 0") {
        std::vector<GenSym> gens;
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j)
                for (int r = 1; r <= 3; ++r) gens.push_back(T(i, j, r));
        for (GenSym g : gens)
            for (GenSym h : gens) {
                Element s = straighten_pair(y2, g, h) + straighten_pair(y2, h, g);
                CHECK(s.normal_form().is_zero());
            }
    }
    SECTION("r = s = 1 reproduces the gl_n bracket, n <= 4") {
        for (int n = 1; n <= 4; ++n) {
            auto yn = AlgebraContext::yangian(n);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    for (int h = 1; h <= n; ++h)
                        for (int k = 1; k <= n; ++k) {
                            Element lhs = straighten_pair(yn, T(i, j, 1), T(h, k, 1));
                            Element rhs(yn);
                            if (h == j) rhs += Element::gen(yn, T(i, k, 1));
                            if (i == k) rhs -= Element::gen(yn, T(h, j, 1));
                            CHECK((lhs - rhs).normal_form().is_zero());
                        }
        }
    }
}

TEST_CASE("element products", "[core]") {
    auto y2 = AlgebraContext::yangian(2);
    Element g12 = Element::gen(y2, T(1, 2, 1));
    Element one = Element::one(y2);

    CHECK(elem_mul(g12, one) == g12);
    CHECK(elem_mul(Element::gen(y2, T(1, 1, 1)) * Rational(2),
                   Element::gen(y2, T(2, 2, 1)) * Rational(3)) ==
          parseY(y2, "6*T[1,1;1]*T[2,2;1]"));
    CHECK(elem_mul(g12 + one, g12 - one) == parseY(y2, "T[1,2;1]*T[1,2;1] - 1"));

    auto u2 = AlgebraContext::tensor_enveloping(2, 1);
    CHECK_THROWS_AS(elem_mul(g12, Element::one(u2) * Rational(2)), std::invalid_argument);
}

TEST_CASE("commutators", "[core]") {
    auto y2 = AlgebraContext::yangian(2);
    Element x = parseY(y2, "T[1,2;1]*T[2,1;1] + 2*T[1,1;2]");
    CHECK(elem_commutator(x, x).normal_form().is_zero());
    CHECK(nf_commutator(Element::gen(y2, T(1, 2, 1)), Element::gen(y2, T(2, 1, 1))) ==
          parseY(y2, "T[1,1;1] - T[2,2;1]"));
    CHECK(elem_commutator(Element::one(y2), x).normal_form().is_zero());
}

TEST_CASE("normal form reduction", "[core]") {
    auto y2 = AlgebraContext::yangian(2);

    SECTION("gl_2 swap with correction") {
        Element x = Element::word(y2, Word{T(2, 1, 1), T(1, 2, 1)});
        CHECK(x.normal_form() == parseY(y2, "T[1,2;1]*T[2,1;1] + T[2,2;1] - T[1,1;1]"));
    }
    SECTION("ordered words are fixed points") {
        Element m = parseY(y2, "T[1,1;1]*T[1,2;2]*T[2,1;1]");
        CHECK(m.normal_form() == m);
    }
    SECTION("single-swap oracle on all length-2 words, n = 2, levels <= 3") {
        std::vector<GenSym> gens;
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j)
                for (int r = 1; r <= 3; ++r) gens.push_back(T(i, j, r));
        for (GenSym g : gens)
            for (GenSym h : gens) {
                Element lhs = Element::word(y2, Word{g, h}).normal_form();
                Element rhs = single_swap_oracle(y2, g, h).normal_form();
                CHECK(lhs == rhs);
            }
    }
    SECTION("normal form of zero is zero") {
        CHECK(Element::zero(y2).normal_form().is_zero());
    }
    SECTION("term cap raises a hard error") {
        auto tiny = AlgebraContext::yangian(3, 8);
        Element w(tiny);
        Word word;
        for (int k = 0; k < 4; ++k) {
            word.push_back(GenSym::yangian(1, 3, 1, 2));
            word.push_back(GenSym::yangian(1, 1, 3, 2));
        }
        w.add_term(word, Rational(1));
        CHECK_THROWS_AS(w.normal_form(), TermCapError);
    }
}

TEST_CASE("normal form properties on random elements", "[core]") {
    auto y3 = AlgebraContext::yangian(3);
    std::mt19937_64 rng(20240817);

    for (int trial = 0; trial < 40; ++trial) {
        Element x = random_element(rng, y3, 3, 6, 3);
        Element nf = x.normal_form();

        // idempotence
        CHECK(nf.normal_form() == nf);

        // strategy independence
        CHECK(x.normal_form(RewriteStrategy::rightmost_outermost) == nf);

        // filtration compatibility
        auto dx = x.degree(DegreeKind::canonical);
        auto dn = nf.degree(DegreeKind::canonical);
        if (dn) CHECK(*dn <= *dx);
        auto lx = x.degree(DegreeKind::loop);
        auto ln = nf.degree(DegreeKind::loop);
        if (ln) CHECK(*ln <= *lx);
    }

    SECTION("soundness under product") {
        for (int trial = 0; trial < 25; ++trial) {
            Element x = random_element(rng, y3, 3, 6, 2);
            Element y = random_element(rng, y3, 3, 6, 2);
            CHECK(elem_mul(x, y).normal_form() ==
                  elem_mul(x.normal_form(), y.normal_form()).normal_form());
        }
    }
}

TEST_CASE("degrees", "[core]") {
    auto y2 = AlgebraContext::yangian(2);
    Element x = parseY(y2, "T[1,2;3]*T[2,1;2]");
    CHECK(degree(DegreeKind::canonical, x) == 5);
    CHECK(degree(DegreeKind::loop, x) == 3);
    CHECK(degree(DegreeKind::canonical, Element::one(y2)) == 0);
    CHECK_FALSE(degree(DegreeKind::canonical, Element::zero(y2)).has_value());

    auto u2 = AlgebraContext::tensor_enveloping(2, 2);
    Element e = Element::word(u2, Word{GenSym::enveloping(1, 1, 2), GenSym::enveloping(2, 1, 1)});
    CHECK(degree(DegreeKind::canonical, e) == 2);
}

TEST_CASE("element grammar", "[core]") {
    auto y2 = AlgebraContext::yangian(2);

    Element two_terms = parse_element(y2, "T[1,2;1]*T[2,1;1] - 1");
    CHECK(two_terms.size() == 2);
    CHECK(two_terms.coefficient(Word{}) == Rational(-1));

    CHECK(parse_element(y2, "3/2*T[1,1;2]").coefficient(Word{T(1, 1, 2)}) == Rational(3, 2));
    CHECK(parse_element(y2, " 0 ").is_zero());
    CHECK(parse_element(y2, "T[1,1;1] - T[1,1;1]").is_zero());

    CHECK_THROWS_AS(parse_element(y2, "T[5,1;1]"), ParseError);
    CHECK_THROWS_AS(parse_element(y2, "T[1,2;0]"), ParseError);
    CHECK_THROWS_AS(parse_element(y2, "T[1,2;1] +"), ParseError);
    CHECK_THROWS_AS(parse_element(y2, "2**T[1,1;1]"), ParseError);
    CHECK_THROWS_AS(parse_element(y2, "E[1;1,1]"), ParseError);
    CHECK_THROWS_AS(parse_element(y2, "@0:T[1,1;1]"), ParseError);
    CHECK_THROWS_AS(parse_element(y2, "@2:T[1,1;1]"), ParseError);
    CHECK_THROWS_AS(parse_element(y2, ""), ParseError);
    CHECK_THROWS_AS(parse_element(y2, "1/0"), ParseError);

    SECTION("reported positions point into the input") {
        try {
            parse_element(y2, "T[1,1;1] + T[9,1;1]");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.position == 11);
        }
    }
    SECTION("scalar access") {
        CHECK(parse_element(y2, "5/3").as_scalar() == Rational(5, 3));
        CHECK_THROWS_AS(parse_element(y2, "T[1,1;1]").as_scalar(), std::invalid_argument);
    }

    SECTION("printer round-trips") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 20; ++trial) {
            Element x = random_element(rng, y2, 2, 5, 4);
            CHECK(parse_element(y2, x.str()) == x);
        }
        CHECK(Element::zero(y2).str() == "0");
        CHECK(parse_element(y2, Element::one(y2).str()) == Element::one(y2));
    }
    SECTION("tensor slot prefix round-trips") {
        auto yy = AlgebraContext::tensor_yangian(2, 2);
        Element x = Element::word(yy, Word{GenSym::yangian(1, 1, 2, 1), GenSym::yangian(2, 1, 1, 3)});
        CHECK(x.str() == "@1:T[1,2;1]*@2:T[1,1;3]");
        CHECK(parse_element(yy, x.str()) == x);
    }
    SECTION("enveloping grammar") {
        auto u2 = AlgebraContext::tensor_enveloping(2, 2);
        Element e = parse_element(u2, "E[1;1,2]*E[2;2,1] - 1/2");
        CHECK(e.size() == 2);
        CHECK(parse_element(u2, e.str()) == e);
    }
}
