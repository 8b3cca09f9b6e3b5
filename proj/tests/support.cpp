#include "support.hpp"

#include "iswb/classic.hpp"
#include "iswb/construct.hpp"
#include "iswb/errors.hpp"

namespace iswb::test {

std::vector<Isw> random_valid_systems(std::uint64_t seed, int count, int max_tokens) {
  Rng rng(seed);
  std::vector<Isw> out;
  out.push_back(terminal_system());
  while (static_cast<int>(out.size()) < count) {
    int shape = rng.below(4);
    if (shape == 0) {
      // image of a random small L-domain
      FinPoset D = random_ldomain(rng, 2 + rng.below(4));
      Isw S = isw_from_poset(D).system;
      if (static_cast<int>(S.tokens.size()) <= max_tokens) out.push_back(S);
    } else if (shape == 1) {
      // witness spread of the full powerset system over {D, a...}:
      // X entails exactly X together with D
      int extra = 1 + rng.below(2);
      std::vector<std::string> toks = {"D"};
      for (int i = 0; i < extra; ++i) toks.push_back("a" + std::to_string(i));
      int n = static_cast<int>(toks.size());
      std::vector<Mask> con, ent;
      for (Mask m = 0; m < (Mask{1} << n); ++m) {
        con.push_back(m);
        ent.push_back(m | bit(0));
      }
      Ais A = make_ais(toks, 0, con, ent);
      if (validate_ais(A).valid()) {
        Isw S = isw_from_ais(A);
        if (static_cast<int>(S.tokens.size()) <= max_tokens) out.push_back(S);
      }
    } else if (shape == 2) {
      out.push_back(isw_from_poset(chain2()).system);
    } else {
      out.push_back(isw_from_poset(flat2()).system);
    }
  }
  for (const Isw& S : out)
    if (!validate_isw(S).valid()) fail(Err::InternalCheckFailed, "random pool produced an invalid system");
  return out;
}

}  // namespace iswb::test
