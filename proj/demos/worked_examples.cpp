#include <iostream>

#include <divdiff/divdiff.hpp>

using namespace divdiff;

int main() {
    Polynomial m = Polynomial::from_exponents({2, 1, 0});
    std::cout << "kpi_1 kpi_2 kpi_1 (x1^2 x2) = "
              << apply_word(OperatorKind::KPi, {1, 2, 1}, m).to_text() << "\n";
    std::cout << "Fbar_21 in 3 vars        = "
              << multifundamental(StrongComposition{{2, 1}}, 3).to_text() << "\n\n";

    WeakComposition a{{0, 1, 2}};
    std::cout << "glides of 012:\n";
    for (const GlideWitness& w : enumerate_glides(a)) std::cout << "  " << w.to_string() << "\n";
    std::cout << "glide polynomial = " << glide_poly(a).to_text() << "\n";
    std::cout << "kaon polynomial  = " << kaon_poly(a).to_text() << "\n\n";

    Polynomial f = Polynomial::from_exponents({3, 0, 1}) - Polynomial::from_exponents({0, 3, 1});
    std::cout << "(x1^3 x3 - x2^3 x3) / (x1 - x2) = " << exact_div_diff(f, 1).to_text() << "\n\n";

    Polynomial g = glide_poly(WeakComposition{{0, 2, 1}});
    std::vector<WeakComposition> support = {WeakComposition{{0, 2, 1}}, WeakComposition{{2, 0, 1}},
                                            WeakComposition{{2, 1, 0}}};
    std::vector<Rational> coeffs = expand_in_basis(g, FamilyKind::Kaon, support);
    std::cout << "glide 021 in the kaon basis:\n";
    for (std::size_t t = 0; t < support.size(); ++t)
        std::cout << "  kaon " << comp_to_string(support[t]) << " : " << coeffs[t].str() << "\n";
    return 0;
}
