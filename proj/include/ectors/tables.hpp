#pragma once

// Bundled appendix tables, the harness that re-checks them, and the
// ascending-discriminant field scan.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ectors/families.hpp"
#include "ectors/json_io.hpp"

namespace ectors {

ECTORS_DEFINE_ERROR(TableFormat);
ECTORS_DEFINE_ERROR(ListNotSorted);
ECTORS_DEFINE_ERROR(NoMatchWithinMax);

inline constexpr int kTableCount = 9;

/// Power-basis coordinates exactly as stored (trailing zeros trimmed).
using Coords = std::vector<Rat>;

/// Table 1: growth of X1 torsion over a field and the curves it yields.
struct GrowthRow {
  std::string modular;
  PolyQ field_poly;
  std::string label;
  TorsionStructure from, to;
  int count = 0;
  bool count_infinite = false;
  std::vector<TorsionStructure> curve_torsion;
};

/// Tables 2-7: a point on X1 and the curve it gives.
struct CurveRow {
  int block = 0;
  PolyQ field_poly;
  std::string modular;
  std::array<Coords, 2> point;
  std::array<Coords, 5> curve;
  TorsionStructure claim;
  long rank_metadata = 0;
};

/// Table 8: least field containing a root of unity.
struct RootRow {
  std::vector<std::string> modular;
  int root_of_unity = 0;
  Int disc;
  PolyQ field_poly;
};

/// Table 9: least field over which X1 gains a non-cuspidal point.
struct DiscRow {
  std::string modular;
  TorsionStructure torsion_q, torsion_k;
  Int disc;
  PolyQ field_poly;
};

struct Table {
  int id = 0;
  std::vector<GrowthRow> growth;
  std::vector<CurveRow> curves;
  std::vector<RootRow> roots;
  std::vector<DiscRow> discs;
  std::string rank_note;

  std::size_t size() const;
};

Table table_from_json(const Json& j);
Json table_to_json(const Table& t);
/// Canonical file contents.
std::string table_text(const Table& t);

/// Directory holding table{1..9}.json and fields/.
std::string default_data_dir();
std::string table_path(int id, const std::string& dir);
Table load_table(int id, const std::string& dir);

NumberField row_field(const PolyQ& f);
NfElem coords_elem(const NumberField& K, const Coords& c);
CurveK row_curve(const CurveRow& r);
PointK row_point(const CurveRow& r);

/// "m,mn" or "(m,mn)".
TorsionStructure parse_structure(const std::string& text);

enum class CheckStatus { Pass, Unresolved, Fail };
std::string status_str(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct RowReport {
  int table = 0;
  std::size_t row = 0;
  std::string label;
  std::vector<Check> checks;
  /// Set when a row could not be processed; counts as unresolved.
  std::string error;

  CheckStatus status() const;
  const Check* find(const std::string& name) const;
};

struct TableReport {
  std::vector<RowReport> rows;
  CheckStatus status() const;
};

struct VerifyOptions {
  std::optional<std::size_t> row;
  unsigned jobs = 1;
  std::string data_dir;
  CertifyOptions certify;
};

TableReport verify_table(int id, const VerifyOptions& opt);
Json report_json(const TableReport& r);

struct FieldEntry {
  int degree = 0;
  Int disc;
  PolyQ poly;
};

/// CSV lines "degree,disc,c0,...,cd"; '#' starts a comment line.
std::vector<FieldEntry> read_field_list(const std::string& path);
std::string field_list_path(const std::string& dir, int degree);

struct ScanTarget {
  enum class Kind { Growth, Root, Point };
  Kind kind = Kind::Growth;
  /// Growth and Point
  std::optional<ModularKind> modular;
  /// Growth: torsion of the model over K; Point: torsion the field must also show, if set
  std::optional<TorsionStructure> structure;
  /// Root: m with Phi_m required
  int root_of_unity = 0;
  /// Point: height bound of the search
  long height = 0;
};

/// "growth:X1(15):(1,16)", "root:3", "point:X1(14)" or "point:X1(14):(1,6)" with
/// optional ":h=N" height suffix.
ScanTarget parse_scan_target(const std::string& text);
std::string target_str(const ScanTarget& t);

struct ScanRejection {
  FieldEntry field;
  std::string reason;
};

struct ScanResult {
  FieldEntry match;
  std::string evidence;
  std::vector<ScanRejection> rejected;
};

/// First entry of an ascending |disc| list meeting the target among the first max entries.
ScanResult scan_fields(const std::vector<FieldEntry>& list, const ScanTarget& target, std::size_t max,
                       const CertifyOptions& opt = {});
Json scan_json(const ScanResult& r);

}  // namespace ectors
