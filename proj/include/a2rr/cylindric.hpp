#ifndef A2RR_CYLINDRIC_HPP
#define A2RR_CYLINDRIC_HPP

#include <map>
#include <vector>

#include "a2rr/series.hpp"

namespace a2rr {

using Profile = std::vector<int>;
using Partition = std::vector<int>;  // weakly decreasing positive parts

Profile parse_profile(std::string_view s);
std::string profile_string(const Profile& c);

bool is_cylindric(const std::vector<Partition>& rows, const Profile& c);

// sum of x^max q^size over cylindric partitions of size <= N (qorder N+1)
BiSeries enumerate_cylindric(const Profile& c, int N);

struct CwChild {
  unsigned subset;   // bit i set when i is in J
  int sign;          // (-1)^{|J|-1}
  int poch_degree;   // |J|-1, factor (xq;q)_{|J|-1}
  int shift;         // |J|, argument x q^{|J|}
  Profile child;
};

std::vector<CwChild> cw_children(const Profile& c);

// all compositions of `level` into r nonnegative parts, lexicographically decreasing
std::vector<Profile> profiles_of(int r, int level);

// joint fixed point of the recursion over all profiles of c's rank and level
std::map<Profile, BiSeries> cw_fixed_point_all(int r, int level, int N);
BiSeries cw_fixed_point(const Profile& c, int N);

// divide by (xq;q)_inf
BiSeries g_to_f(const BiSeries& G);
BiSeries f_to_g(const BiSeries& F);

}  // namespace a2rr

#endif  // A2RR_CYLINDRIC_HPP
