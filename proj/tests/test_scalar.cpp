#include "doctest.h"
#include "kleinian/errors.hpp"
#include "kleinian/random.hpp"
#include "kleinian/scalar.hpp"

using namespace kleinian;

TEST_SUITE("exact_scalars") {

TEST_CASE("cyclotomic polynomials") {
    auto coeffs = [](int k) {
        std::vector<long> out;
        for (const auto &c : CycField::get(k)->cyclotomic())
            out.push_back(c.get_num().get_si());
        return out;
    };
    CHECK(coeffs(1) == std::vector<long>{-1, 1});
    CHECK(coeffs(4) == std::vector<long>{1, 0, 1});
    CHECK(coeffs(6) == std::vector<long>{1, -1, 1});
    CHECK(coeffs(8) == std::vector<long>{1, 0, 0, 0, 1});
    CHECK(coeffs(12) == std::vector<long>{1, 0, -1, 0, 1});
    CHECK(CycField::get(20)->degree() == 8);
}

TEST_CASE("arithmetic examples") {
    ScopedCyclotomicIndex k(4);
    const CycScalar i = CycScalar::imag();
    CHECK(i * i == CycScalar(-1));
    CHECK(CycScalar(1, 2) + CycScalar(1, 3) == CycScalar(5, 6));
    CHECK((CycScalar(1) + i) * (CycScalar(1) - i) == CycScalar(2));
    CHECK_THROWS_AS(CycScalar(1) / CycScalar(0), DivisionByZero);
    CHECK(i.to_string() == "i");
    CHECK((CycScalar(1, 2) - CycScalar(3, 2) * i).to_string() == "1/2 - 3/2*i");
}

TEST_CASE("root of unity order") {
    ScopedCyclotomicIndex k(4);
    CHECK(root_of_unity_order(CycScalar::imag()) == 4);
    CHECK(root_of_unity_order(CycScalar(-1)) == 2);
    CHECK(root_of_unity_order(CycScalar(1)) == 1);
    CHECK_FALSE(root_of_unity_order(CycScalar(2)).has_value());
    CHECK_FALSE(root_of_unity_order(CycScalar(1) + CycScalar::imag()).has_value());
    ScopedCyclotomicIndex k12(12);
    CHECK(root_of_unity_order(CycScalar::zeta()) == 12);
    CHECK(root_of_unity_order(-CycScalar::zeta()) == 12);
    CHECK(root_of_unity_order(CycScalar::zeta().pow(4)) == 3);
    ScopedCyclotomicIndex k5(5);
    CHECK(root_of_unity_order(-CycScalar::zeta()) == 10);
}

TEST_CASE("field mismatch") {
    CycScalar i4 = [] {
        ScopedCyclotomicIndex k(4);
        return CycScalar::imag();
    }();
    CycScalar z3 = [] {
        ScopedCyclotomicIndex k(3);
        return CycScalar::zeta();
    }();
    CHECK_THROWS_AS(i4 + z3, FieldMismatch);
    CHECK(i4 * CycScalar(2) == i4 + i4);
}

TEST_CASE("field axioms on random triples") {
    for (int k : {4, 3, 8, 12}) {
        ScopedCyclotomicIndex guard(k);
        Sampler s(1000 + k);
        auto random_elem = [&] {
            std::vector<mpq_class> c;
            for (int j = 0; j < session_field()->degree(); ++j)
                c.push_back(s.rational());
            return CycScalar(session_field(), c);
        };
        for (int trial = 0; trial < 200; ++trial) {
            CycScalar a = random_elem(), b = random_elem(), c = random_elem();
            CHECK((a * b) * c == a * (b * c));
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a * b == b * a);
            if (!a.is_zero())
                CHECK(a * a.inverse() == CycScalar(1));
        }
    }
}

TEST_CASE("norm identity in Q(i)") {
    ScopedCyclotomicIndex k(4);
    Sampler s(7);
    const CycScalar i = CycScalar::imag();
    for (int trial = 0; trial < 200; ++trial) {
        CycScalar a(s.rational()), b(s.rational());
        CHECK((a + b * i) * (a - b * i) == a * a + b * b);
    }
}

TEST_CASE("zeta powers reduce") {
    ScopedCyclotomicIndex k(5);
    CycScalar z = CycScalar::zeta();
    CHECK(z.pow(5) == CycScalar(1));
    CHECK(CycScalar(1) + z + z.pow(2) + z.pow(3) + z.pow(4) == CycScalar(0));
    CHECK(z.pow(-1) == z.pow(4));
    CHECK(z.pow(2).to_string() == "zeta^2");
}

}
