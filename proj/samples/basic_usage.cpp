// Small tour of the library: Witt counts, a Hall basis, an abelian
// multiplier and the bounds for the dihedral group of order 8.

#include "nilmult/bounds.hpp"
#include "nilmult/free_nilpotent.hpp"
#include "nilmult/groups.hpp"
#include "nilmult/witt_hall.hpp"

#include <iostream>

int main() {
  using namespace nilmult;

  std::cout << "chi_3(3) = " << witt(3, 3) << "\n";

  const auto basis = hall_basis(2, 3);
  for (std::size_t i = 0; i < basis.size(); ++i) std::cout << "  " << basis.to_string(i) << "\n";

  const auto a = AbelianGroup::from_cyclic_orders({6, 4});
  std::cout << a.to_string() << ", M^(2) = " << abelian_multiplier(a, 2).to_string() << "\n";

  const FreeNilpotentGroup f(2, 3);
  std::cout << "x2 x1 = " << f.to_string(f.collect(parse_letter_word("x2 x1"))) << "\n";

  const BoundContext ctx(groups::d8(), 2);
  std::cout << "M^(2)(D8) = " << ctx.multiplier()->value.to_string() << "\n";
  for (const auto& r : all_reports(ctx)) {
    if (!r.applicable || !r.rhs) continue;
    std::cout << "  " << r.id << ": " << (r.lhs ? to_string(*r.lhs) : "?") << " " << to_string(r.relation) << " "
              << to_string(*r.rhs) << " (" << to_string(r.verdict) << ")\n";
  }
}
