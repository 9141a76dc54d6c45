#pragma once

namespace dk {

/// Geometric content of a delta-tangle type letter. `chir` picks the
/// rotational sense of the central triangle (which neighbor a strand meets
/// first); `pat` picks which of the two cyclic over/under dominance
/// patterns the three crossings realize. The letter <-> (chir, pat)
/// bijection is fixed by the calibration recorded in the tabulation tests.
struct LetterSpec {
  int chir;  // 0 or 1
  int pat;   // 0 or 1
};

LetterSpec letter_spec(char c);
char spec_letter(int chir, int pat);

}  // namespace dk
