#pragma once

#include <string>
#include <vector>

namespace zprop {

struct Outcome {
  std::string name;
  long cases = 0;
  long violations = 0;
  std::vector<std::string> notes;  // first few counterexamples

  bool ok() const { return violations == 0; }
};

inline constexpr int kFuzzCases = 10000;
inline constexpr int kLemma26Cases = 10000;
inline constexpr int kSection2Cases = 1000;
inline constexpr int kAbsorbCases = 1000;

Outcome interval_fuzz(int cases = kFuzzCases, unsigned long long seed = 0x5eed);
Outcome lemma_2_6(int cases = kLemma26Cases, unsigned long long seed = 26);
Outcome section2(int cases = kSection2Cases, unsigned long long seed = 42);
Outcome absorb_soundness(int cases = kAbsorbCases, unsigned long long seed = 3511);
// every column of the default T0 table at c = 1.501
Outcome table_monotone();
Outcome zeta_ball_oracles();

}  // namespace zprop
