#include "ectors/classification.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace ectors {

namespace {

StructureSet cyclic_up_to(long n, std::initializer_list<long> missing) {
  StructureSet s;
  for (long k = 1; k <= n; ++k)
    if (std::find(missing.begin(), missing.end(), k) == missing.end()) s.insert({1, k});
  return s;
}

void add_multiples(StructureSet& s, long m, long nmax) {
  for (long k = 1; k <= nmax; ++k) s.insert({m, m * k});
}

StructureSet build(int d, bool infinite) {
  StructureSet s;
  if (!infinite) {
    switch (d) {
      case 1:
        s = cyclic_up_to(12, {11});
        add_multiples(s, 2, 4);
        break;
      case 2:
        s = cyclic_up_to(18, {17});
        add_multiples(s, 2, 6);
        s.insert({{3, 3}, {3, 6}, {4, 4}});
        break;
      case 3:
        s = cyclic_up_to(21, {17, 19});
        add_multiples(s, 2, 7);
        break;
    }
    return s;
  }
  switch (d) {
    case 4:
      s = cyclic_up_to(24, {19, 23});
      add_multiples(s, 2, 9);
      add_multiples(s, 3, 3);
      s.insert({{4, 4}, {4, 8}, {5, 5}, {6, 6}});
      break;
    case 5:
      s = cyclic_up_to(25, {23});
      add_multiples(s, 2, 8);
      break;
    case 6:
      s = cyclic_up_to(30, {23, 25, 29});
      add_multiples(s, 2, 10);
      add_multiples(s, 3, 4);
      s.insert({{4, 4}, {4, 8}, {6, 6}});
      break;
  }
  return s;
}

const std::map<TorsionStructure, int>& genus_table() {
  static const std::map<TorsionStructure, int> t = [] {
    std::map<TorsionStructure, int> g;
    const int cyclic[] = {0, 0, 0, 0, 0, 0, 0, 1, 0, 2, 1, 1, 2, 5, 2, 7, 3, 5, 6, 12, 5, 12, 10, 13, 10, 22, 9};
    for (long n = 4; n <= 30; ++n) g[{1, n}] = cyclic[n - 4];
    const int two[] = {0, 0, 0, 0, 1, 1, 4, 5, 7, 9};
    for (long n = 1; n <= 10; ++n) g[{2, 2 * n}] = two[n - 1];
    const int three[] = {0, 0, 1, 3};
    for (long n = 1; n <= 4; ++n) g[{3, 3 * n}] = three[n - 1];
    g[{4, 4}] = 0;
    g[{4, 8}] = 1;
    g[{5, 5}] = 0;
    g[{6, 6}] = 1;
    return g;
  }();
  return t;
}

}  // namespace

const StructureSet& phi(int d) {
  static const StructureSet s1 = build(1, false), s2 = build(2, false), s3 = build(3, false);
  switch (d) {
    case 1:
      return s1;
    case 2:
      return s2;
    case 3:
      return s3;
  }
  throw OutOfRange("phi(d) is tabulated for d = 1, 2, 3");
}

const StructureSet& phi_infinity(int d) {
  static const StructureSet s4 = build(4, true), s5 = build(5, true), s6 = build(6, true);
  switch (d) {
    case 4:
      return s4;
    case 5:
      return s5;
    case 6:
      return s6;
  }
  throw OutOfRange("phi_infinity(d) is tabulated for d = 4, 5, 6");
}

const StructureSet& known_structures(int d) { return d <= 3 ? phi(d) : phi_infinity(d); }

int genus(long m, long mn) { return genus(TorsionStructure{m, mn}); }

int genus(const TorsionStructure& s) {
  auto it = genus_table().find(s);
  if (it == genus_table().end()) throw OutOfRange("no tabulated genus for " + s.str());
  return it->second;
}

Json phi_json() {
  Json j;
  j["version"] = kClassificationVersion;
  auto dump = [](const StructureSet& s) {
    Json a = Json::array();
    for (const auto& t : s) a.push_back({t.m, t.mn});
    return a;
  };
  for (int d = 1; d <= 3; ++d) j["phi"][std::to_string(d)] = dump(phi(d));
  for (int d = 4; d <= 6; ++d) j["phi_infinity"][std::to_string(d)] = dump(phi_infinity(d));
  return j;
}

Json genus_json() {
  Json j;
  j["version"] = kClassificationVersion;
  Json rows = Json::array();
  for (const auto& [s, g] : genus_table()) rows.push_back({{"m", s.m}, {"mn", s.mn}, {"genus", g}});
  j["genus"] = rows;
  return j;
}

}  // namespace ectors
