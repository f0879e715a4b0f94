// Embedded expansions of the two reference tables. Transcribed by hand;
// the compact partition syntax matches parse_schur_sum.

#include "schurq/verify.hpp"

namespace schurq {

const std::vector<GoldenDFamilyRow>& golden_table1() {
  static const std::vector<GoldenDFamilyRow> rows = {
      {7, 0, "s[2^6]"},
      {7, 1, "s[4,2^4] + s[3^2,2^3] + s[3,2^4,1]"},
      {7, 2,
       "s[3^2,2^2,1^2] + s[4,3^2,2] + s[4^2,2^2] + s[3^3,2,1] + s[4,3,2^2,1]"},
      {7, 3, "s[4,3^2,1^2] + s[3^3,1^3] + s[4^2,3,1] + s[4^3]"},
      {7, 4,
       "-s[4,3^2,2] - s[4,3^2,1^2] - s[3^3,2,1] - s[3^3,1^3] - s[4^2,3,1]"},
      {7, 5, "-s[3^2,2^3] - s[3^2,2^2,1^2] - s[4,3,2^2,1]"},
      {7, 6, "-s[3,2^4,1]"},
      {7, 7, "0"},

      {8, 0, "s[2^7]"},
      {8, 1, "s[4,2^5] + s[3^2,2^4] + s[3,2^5,1]"},
      {8, 2,
       "s[3^2,2^3,1^2] + s[4,3^2,2^2] + s[4^2,2^3] + s[3^3,2^2,1] + "
       "s[4,3,2^3,1]"},
      {8, 3,
       "s[4,3^2,2,1^2] + s[3^3,2,1^3] + s[4^2,3,2,1] + s[4^3,2] + s[3^4,1^2] "
       "+ s[4^2,3^2] + s[4,3^3,1]"},
      {8, 4, "-s[3^4,1^2] - s[4^2,3^2] - s[4,3^3,1]"},
      {8, 5,
       "-s[4^2,3,2,1] - s[3^3,2^2,1] - s[3^3,2,1^3] - s[4,3^2,2,1^2] - "
       "s[4,3^2,2^2]"},
      {8, 6, "-s[3^2,2^4] - s[3^2,2^3,1^2] - s[4,3,2^3,1]"},
      {8, 7, "-s[3,2^5,1]"},
      {8, 8, "0"},

      {9, 0, "s[2^8]"},
      {9, 1, "s[4,2^6] + s[3^2,2^5] + s[3,2^6,1]"},
      {9, 2,
       "s[3^2,2^4,1^2] + s[4,3^2,2^3] + s[4^2,2^4] + s[3^3,2^3,1] + "
       "s[4,3,2^4,1]"},
      {9, 3,
       "s[4,3^2,2^2,1^2] + s[3^3,2^2,1^3] + s[4^2,3,2^2,1] + s[4^3,2^2] + "
       "s[3^4,2,1^2] + s[4^2,3^2,2] + s[4,3^3,2,1]"},
      {9, 4,
       "s[4,3^3,1^3] + s[4^2,3^2,1^2] + s[4^4] + s[4^3,3,1] + s[3^4,1^4]"},
      {9, 5,
       "-s[4,3^3,1^3] - s[4^2,3^2,1^2] - s[4^4] - s[4^3,3,1] - s[3^4,1^4] - "
       "s[3^4,2,1^2] - s[4^2,3^2,2] - s[4,3^3,2,1]"},
      {9, 6,
       "-s[4^2,3,2^2,1] - s[3^3,2^3,1] - s[3^3,2^2,1^3] - s[4,3^2,2^2,1^2] - "
       "s[4,3^2,2^3]"},
      {9, 7, "-s[3^2,2^5] - s[3^2,2^4,1^2] - s[4,3,2^4,1]"},
      {9, 8, "-s[3,2^6,1]"},
      {9, 9, "0"},
  };
  return rows;
}

const std::vector<GoldenDabkrRow>& golden_table2() {
  static const std::vector<GoldenDabkrRow> rows = {
      {0, 1, 0, 8, "0"},
      {0, 1, 1, 8, "s[3,2^5] + s[2^6,1]"},
      {0, 1, 2, 8,
       "s[3^3,2^2] + s[3^2,2^3,1] + s[3,2^4,1^2] + s[4,3,2^3] + s[4,2^4,1]"},
      {0, 1, 3, 8,
       "s[4,3^2,2,1] + s[4,3,2^2,1^2] + s[3^3,2,1^2] + s[3^2,2^2,1^3] + "
       "s[4^2,3,2] + s[4^2,2^2,1] + s[4,3^3] + s[3^4,1]"},
      {0, 1, 4, 8,
       "s[4^2,3,1^2] - s[4,3^3] + s[4,3^2,1^3] - s[3^4,1] + s[3^3,1^4] + "
       "s[4^3,1]"},
      {0, 1, 5, 8,
       "-s[4,3^2,2,1] - s[3^3,2^2] - s[3^3,2,1^2] - s[4^2,3,1^2] - "
       "s[4,3^2,1^3] - s[3^3,1^4]"},
      {0, 1, 6, 8, "-s[4,3,2^2,1^2] - s[3^2,2^3,1] - s[3^2,2^2,1^3]"},
      {0, 1, 7, 8, "-s[3,2^4,1^2]"},
      {0, 1, 8, 8, "0"},

      {0, 1, 0, 9, "0"},
      {0, 1, 1, 9, "s[3,2^6] + s[2^7,1]"},
      {0, 1, 2, 9,
       "s[3^3,2^3] + s[3^2,2^4,1] + s[3,2^5,1^2] + s[4,3,2^4] + s[4,2^5,1]"},
      {0, 1, 3, 9,
       "s[4,3^3,2] + s[3^4,2,1] + s[4^2,2^3,1] + s[4,3,2^3,1^2] + "
       "s[3^2,2^3,1^3] + s[4^2,3,2^2] + s[4,3^2,2^2,1] + s[3^3,2^2,1^2]"},
      {0, 1, 4, 9,
       "s[4^3,3] + s[4^2,3^2,1] + s[4,3^3,1^2] + s[3^4,1^3] + s[4^3,2,1] + "
       "s[4^2,3,2,1^2] + s[4,3^2,2,1^3] + s[3^3,2,1^4]"},
      {0, 1, 5, 9,
       "-s[4^2,3^2,1] - s[4,3^3,1^2] - s[3^4,1^3] - s[4,3^3,2] - s[3^4,2,1]"},
      {0, 1, 6, 9,
       "-s[4,3^2,2^2,1] - s[3^3,2^3] - s[3^3,2^2,1^2] - s[4^2,3,2,1^2] - "
       "s[4,3^2,2,1^3] - s[3^3,2,1^4]"},
      {0, 1, 7, 9, "-s[4,3,2^3,1^2] - s[3^2,2^4,1] - s[3^2,2^3,1^3]"},
      {0, 1, 8, 9, "-s[3,2^5,1^2]"},

      {0, 2, 1, 10, "0"},
      {0, 2, 2, 10, "s[3^2,2^5] + s[3,2^6,1] + s[2^7,1^2]"},
      {0, 2, 3, 10,
       "s[3^4,2^2] + s[4,3^2,2^3] + s[4,2^5,1^2] + s[3^3,2^3,1] + "
       "s[3^2,2^4,1^2] + s[3,2^5,1^3] + s[4,3,2^4,1]"},
      {0, 2, 4, 10,
       "s[4,3^4] + s[4^2,3^2,2] + s[4,3^3,2,1] + s[3^4,2,1^2] + "
       "s[4^2,2^3,1^2] + s[4,3,2^3,1^3] + s[3^2,2^3,1^4] + s[4^2,3,2^2,1] + "
       "s[4,3^2,2^2,1^2] + s[3^3,2^2,1^3]"},
      {0, 2, 5, 10,
       "-s[3^5,1] - s[4,3^4] + s[4^3,3,1] + s[4^2,3^2,1^2] + s[4,3^3,1^3] + "
       "s[3^4,1^4] + s[4^3,2,1^2] + s[4^2,3,2,1^3] + s[4,3^2,2,1^4] + "
       "s[3^3,2,1^5]"},
      {0, 2, 6, 10,
       "-s[4^2,3^2,1^2] - s[4,3^3,1^3] - s[3^4,1^4] - s[4,3^3,2,1] - "
       "s[3^4,2,1^2] - s[3^4,2^2]"},
      {0, 2, 7, 10,
       "-s[4,3^2,2^2,1^2] - s[3^3,2^2,1^3] - s[3^3,2^3,1] - s[3^3,2,1^5] - "
       "s[4,3^2,2,1^4] - s[4^2,3,2,1^3]"},
      {0, 2, 8, 10, "-s[4,3,2^3,1^3] - s[3^2,2^4,1^2] - s[3^2,2^3,1^4]"},
      {0, 2, 9, 10, "-s[3,2^5,1^3]"},
  };
  return rows;
}

}  // namespace schurq
