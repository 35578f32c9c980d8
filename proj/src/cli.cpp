// CLI verb dispatch.  See LICENSE.
#include "dmw/cli.hpp"

#include <algorithm>
#include <ctime>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dmw/half_diagram.hpp"
#include "dmw/monoid.hpp"
#include "dmw/protocols.hpp"
#include "dmw/rep.hpp"
#include "dmw/selftest.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dmw {

namespace {

using nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

// --- rendering helpers ------------------------------------------------------

std::string iso_now() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// exact fraction, "p/q" or a plain integer
std::string rat_exact(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return c.get_str();
}

// exact fraction plus a 6-significant-digit decimal for proper ratios
std::string rat_pretty(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  std::ostringstream os;
  os << c.get_str() << " ~ " << std::setprecision(6) << c.get_d();
  return os.str();
}

const char* status_str(BoundStatus s) {
  switch (s) {
    case BoundStatus::Exact:
      return "exact";
    case BoundStatus::LowerBound:
      return "lower-bound";
    default:
      return "unknown";
  }
}

std::string gap_value_str(const GapValue& v) {
  return v.infinite ? "infinity" : rat_pretty(v.value);
}

ordered_json gap_value_json(const GapValue& v) {
  ordered_json j;
  j["value"] = v.infinite ? "infinity" : rat_exact(v.value);
  if (!v.infinite && v.value.get_den() != 1) j["approx"] = v.value.get_d();
  j["status"] = status_str(v.status);
  j["source"] = v.source;
  return j;
}

std::string csv_quote(const std::string& s) {
  std::string q = "\"";
  for (char c : s) {
    q += c;
    if (c == '"') q += '"';
  }
  q += '"';
  return q;
}

struct validation_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// --- shared option bundle ----------------------------------------------------

struct Options {
  std::string family;
  int n = 0;
  int k = -1;
  long characteristic = 0;
  std::string format = "text";
  std::uint64_t seed = 0;
  bool timestamps = false;
};

Family need_family(const Options& o) {
  auto f = parse_family(o.family);
  if (!f)
    throw validation_error("unknown family '" + o.family +
                           "' (expected one of: tl, motzkin, brauer, prook, "
                           "rook, rookbrauer, ppartition, partition, sym)");
  return *f;
}

FieldSpec need_field(const Options& o) {
  FieldSpec fs{o.characteristic};
  validate_field(fs);  // throws std::invalid_argument on non-prime
  return fs;
}

void stamp_text(const Options& o, std::ostream& out) {
  if (o.timestamps) out << "generated: " << iso_now() << "\n";
}

void stamp_csv(const Options& o, std::ostream& out) {
  out << "# schema_version=" << kSchemaVersion << "\n";
  if (o.timestamps) out << "# generated=" << iso_now() << "\n";
}

void stamp_json(const Options& o, ordered_json& j) {
  j["schema_version"] = kSchemaVersion;
  if (o.timestamps) j["generated"] = iso_now();
}

void emit_json(const ordered_json& j, std::ostream& out) {
  out << j.dump(2) << "\n";
}

// map a width to the J-cell index, or explain which widths exist
size_t need_cell_of_width(const DiagramMonoid& m, const CellStructure& cs,
                          int width) {
  auto c = cell_of_width(m, cs, width);
  if (!c)
    throw validation_error(std::string(family_name(m.family())) + "_" +
                           std::to_string(m.degree()) +
                           " has no J-cell of width " + std::to_string(width));
  return *c;
}

// --- enumerate ---------------------------------------------------------------

int run_enumerate(const Options& o, bool elements, long max_elements,
                  std::ostream& out) {
  Family f = need_family(o);
  EnumGuard guard;
  if (max_elements > 0) guard.max_elements = max_elements;
  std::vector<Diagram> elems = enumerate_family(f, o.n, guard);
  Int card = family_cardinality(f, o.n);
  if (Int(static_cast<long>(elems.size())) != card)
    throw std::logic_error("enumeration disagrees with the closed form");
  if (o.format == "csv") {
    stamp_csv(o, out);
    out << "family,n,index,element\n";
    if (elements)
      for (size_t i = 0; i < elems.size(); ++i)
        out << family_name(f) << "," << o.n << "," << i << ","
            << csv_quote(elems[i].to_string()) << "\n";
    else
      out << family_name(f) << "," << o.n << "," << elems.size() << ",\n";
    return 0;
  }
  if (o.format == "json") {
    ordered_json j;
    stamp_json(o, j);
    j["family"] = family_name(f);
    j["n"] = o.n;
    j["size"] = card.get_str();
    if (elements) {
      ordered_json arr = ordered_json::array();
      for (const Diagram& d : elems) arr.push_back(d.to_string());
      j["elements"] = std::move(arr);
    }
    emit_json(j, out);
    return 0;
  }
  stamp_text(o, out);
  out << family_name(f) << "_" << o.n << ": " << card.get_str()
      << " elements (matches the closed form)\n";
  if (elements)
    for (const Diagram& d : elems) out << d.to_string() << "\n";
  return 0;
}

// --- cells -------------------------------------------------------------------

int run_cells(const Options& o, std::ostream& out) {
  Family f = need_family(o);
  DiagramMonoid m(f, o.n);
  CellStructure cs = green_cells(m);
  if (o.format == "csv") {
    stamp_csv(o, out);
    out << "cell,width,size,l_classes,r_classes,h_size,has_idempotent\n";
    for (size_t c = 0; c < cs.num_j; ++c) {
      const JCell& cell = cs.cells[c];
      out << c << "," << cell_width(m, cs, c) << "," << cell.elements.size()
          << "," << cell.num_l << "," << cell.num_r << "," << cell.h_size
          << "," << (cell.has_idempotent ? 1 : 0) << "\n";
    }
    return 0;
  }
  if (o.format == "json") {
    ordered_json j;
    stamp_json(o, j);
    j["family"] = family_name(f);
    j["n"] = o.n;
    j["size"] = m.size();
    j["num_j"] = cs.num_j;
    ordered_json arr = ordered_json::array();
    for (size_t c = 0; c < cs.num_j; ++c) {
      const JCell& cell = cs.cells[c];
      arr.push_back(ordered_json{{"cell", c},
                                 {"width", cell_width(m, cs, c)},
                                 {"size", cell.elements.size()},
                                 {"l_classes", cell.num_l},
                                 {"r_classes", cell.num_r},
                                 {"h_size", cell.h_size},
                                 {"has_idempotent", cell.has_idempotent}});
    }
    j["cells"] = std::move(arr);
    emit_json(j, out);
    return 0;
  }
  stamp_text(o, out);
  out << family_name(f) << "_" << o.n << ": " << m.size() << " elements, "
      << cs.num_j << " J-cells (units first)\n";
  for (size_t c = 0; c < cs.num_j; ++c) {
    const JCell& cell = cs.cells[c];
    out << "  J_" << cell_width(m, cs, c) << ": " << cell.elements.size()
        << " elements = " << cell.num_l << " x " << cell.num_r
        << " H-cells of size " << cell.h_size
        << (cell.has_idempotent ? "" : " (no idempotent)") << "\n";
  }
  return 0;
}

// --- dims / ssdims -----------------------------------------------------------

int run_dims(const Options& o, std::ostream& out) {
  Family f = need_family(o);
  if (f != Family::TL)
    throw validation_error(
        "exact simple dimensions are only available in closed form for the "
        "Temperley-Lieb family; for other families the dimensions are open "
        "and only semisimple dimensions (ssdims) or bounds (bounds) are "
        "reported");
  need_field(o);
  const char* source = "table-formula";
  if (o.format == "csv") {
    stamp_csv(o, out);
    out << "family,n,k,char,dim,ssdim,source\n";
    for (long n = 0; n <= o.n; ++n) {
      auto dims = simple_dims_tl(n, o.characteristic);
      auto ss = ssdims(Family::TL, n);
      for (size_t i = 0; i < dims.size(); ++i)
        out << "tl," << n << "," << dims[i].first << "," << o.characteristic
            << "," << dims[i].second.get_str() << "," << ss[i].second.get_str()
            << "," << source << "\n";
    }
    return 0;
  }
  if (o.format == "json") {
    ordered_json j;
    stamp_json(o, j);
    j["family"] = "tl";
    j["char"] = o.characteristic;
    j["source"] = source;
    ordered_json rows = ordered_json::array();
    for (long n = 0; n <= o.n; ++n) {
      auto dims = simple_dims_tl(n, o.characteristic);
      auto ss = ssdims(Family::TL, n);
      for (size_t i = 0; i < dims.size(); ++i)
        rows.push_back(ordered_json{{"n", n},
                                    {"k", dims[i].first},
                                    {"dim", dims[i].second.get_str()},
                                    {"ssdim", ss[i].second.get_str()}});
    }
    j["rows"] = std::move(rows);
    emit_json(j, out);
    return 0;
  }
  stamp_text(o, out);
  out << "simple dimensions of TL_n, characteristic " << o.characteristic
      << " (k = apex width)\n";
  for (long n = 0; n <= o.n; ++n) {
    auto dims = simple_dims_tl(n, o.characteristic);
    out << "  n=" << std::setw(2) << n << ":";
    for (const auto& [k, d] : dims) out << "  k=" << k << ":" << d.get_str();
    out << "\n";
  }
  return 0;
}

int run_ssdims(const Options& o, std::ostream& out) {
  Family f = need_family(o);
  auto ss = ssdims(f, o.n);
  if (o.format == "csv") {
    stamp_csv(o, out);
    out << "family,n,k,char,dim,ssdim,source\n";
    for (const auto& [k, d] : ss)
      out << family_name(f) << "," << o.n << "," << k << ",0,,"
          << d.get_str() << ",table-formula\n";
    return 0;
  }
  if (o.format == "json") {
    ordered_json j;
    stamp_json(o, j);
    j["family"] = family_name(f);
    j["n"] = o.n;
    j["source"] = "table-formula";
    ordered_json rows = ordered_json::array();
    for (const auto& [k, d] : ss)
      rows.push_back(ordered_json{{"k", k}, {"ssdim", d.get_str()}});
    j["rows"] = std::move(rows);
    emit_json(j, out);
    return 0;
  }
  stamp_text(o, out);
  out << "semisimple dimensions of " << family_name(f) << "_" << o.n
      << " (k = apex width)\n";
  for (const auto& [k, d] : ss)
    out << "  k=" << std::setw(2) << k << ": " << d.get_str() << "\n";
  return 0;
}

// --- gram --------------------------------------------------------------------

int run_gram(const Options& o, bool rank_only, std::ostream& out) {
  Family f = need_family(o);
  if (o.k < 0) throw validation_error("gram requires --k (apex width)");
  FieldSpec fs = need_field(o);
  IntMatrix g = gram_matrix(f, o.n, o.k);
  Int rank = gram_rank_dim(f, o.n, o.k, fs);
  if (o.format == "csv") {
    stamp_csv(o, out);
    out << "# family=" << family_name(f) << " n=" << o.n << " k=" << o.k
        << " field=" << fs.name() << " rank=" << rank.get_str() << "\n";
    if (!rank_only)
      for (size_t i = 0; i < g.rows; ++i) {
        for (size_t j = 0; j < g.cols; ++j)
          out << (j ? "," : "") << g.at(i, j);
        out << "\n";
      }
    return 0;
  }
  if (o.format == "json") {
    ordered_json j;
    stamp_json(o, j);
    j["family"] = family_name(f);
    j["n"] = o.n;
    j["k"] = o.k;
    j["field"] = fs.name();
    j["rows"] = g.rows;
    j["rank"] = rank.get_str();
    if (!rank_only) {
      ordered_json mat = ordered_json::array();
      for (size_t i = 0; i < g.rows; ++i) {
        ordered_json row = ordered_json::array();
        for (size_t jj = 0; jj < g.cols; ++jj) row.push_back(g.at(i, jj));
        mat.push_back(std::move(row));
      }
      j["matrix"] = std::move(mat);
    }
    emit_json(j, out);
    return 0;
  }
  stamp_text(o, out);
  out << "Gram matrix of " << family_name(f) << "_" << o.n << " at apex k="
      << o.k << ": " << g.rows << " x " << g.cols << ", rank "
      << rank.get_str() << " over " << fs.name() << "\n";
  if (!rank_only)
    for (size_t i = 0; i < g.rows; ++i) {
      out << "  ";
      for (size_t j = 0; j < g.cols; ++j) out << (j ? " " : "") << g.at(i, j);
      out << "\n";
    }
  return 0;
}

// --- gap ---------------------------------------------------------------------

void print_gap(const Options& o, const std::string& what, const GapValue& v,
               std::ostream& out) {
  if (o.format == "json") {
    ordered_json j;
    stamp_json(o, j);
    j["quantity"] = what;
    const ordered_json fields = gap_value_json(v);
    for (const auto& [key, val] : fields.items()) j[key] = val;
    emit_json(j, out);
    return;
  }
  stamp_text(o, out);
  out << what << " = " << gap_value_str(v) << "  [" << status_str(v.status)
      << "; " << v.source << "]\n";
}

int run_gap(const Options& o, long cyclic, bool faithful, bool semisimple,
            long deg, std::optional<long> trunc, std::ostream& out) {
  if (o.format == "csv")
    throw validation_error("gap has no tabular output; use text or json");
  if (cyclic > 0) {
    std::string name = "Z/" + std::to_string(cyclic);
    if (faithful) {
      if (o.characteristic != 0)
        throw validation_error(
            "the minimal faithful dimension is implemented over Q only");
      print_gap(o, "faith(" + name + ", Q)", cyclic_faith_rational(cyclic),
                out);
      return 0;
    }
    if (o.characteristic != 0) {
      print_gap(o,
                "gap(" + name + ", F_" + std::to_string(o.characteristic) +
                    (deg > 1 ? "^" + std::to_string(deg) : "") + ")",
                cyclic_gap_fq(cyclic, o.characteristic, deg), out);
      return 0;
    }
    print_gap(o, "gap(" + name + ", Q)", cyclic_gap_rational(cyclic), out);
    return 0;
  }
  Family f = need_family(o);
  std::string name = std::string(family_name(f)) + "_" + std::to_string(o.n);
  if (trunc) name += ",width<=" + std::to_string(*trunc);
  if (semisimple) {
    print_gap(o, "ssgap(" + name + ")", ssgap_planar(f, o.n, trunc), out);
    return 0;
  }
  if (f == Family::TL) {
    print_gap(o,
              "gap(" + name + ", char " + std::to_string(o.characteristic) +
                  ")",
              gap_tl(o.n, trunc, o.characteristic), out);
    return 0;
  }
  if (f == Family::PlanarRook) {
    if (trunc)
      throw validation_error(
          "truncated planar rook gaps use the two-sided truncation; see "
          "bounds");
    print_gap(o, "gap(" + name + ")", gap_prook(o.n), out);
    return 0;
  }
  throw validation_error(
      "exact gaps are implemented for tl, prook, and --cyclic; other "
      "families have open gaps — use bounds for the theorem-driven lower "
      "bounds");
}

// --- bounds ------------------------------------------------------------------

int run_bounds(const Options& o, std::optional<long> trunc,
               std::ostream& out) {
  if (o.format == "csv")
    throw validation_error("bounds has no tabular output; use text or json");
  Family f = need_family(o);
  GapReport r = gap_bounds(f, o.n, trunc, o.characteristic);
  if (o.format == "json") {
    ordered_json j;
    stamp_json(o, j);
    j["monoid"] = r.monoid;
    j["char"] = r.characteristic;
    if (r.size) j["size"] = r.size->get_str();
    j["gap"] = gap_value_json(r.gap);
    j["ssgap"] = gap_value_json(r.ssgap);
    j["faith"] = gap_value_json(r.faith);
    emit_json(j, out);
    return 0;
  }
  stamp_text(o, out);
  out << r.monoid << ", characteristic " << r.characteristic << "\n";
  if (r.size) out << "  |M|   = " << r.size->get_str() << "\n";
  auto line = [&](const char* label, const GapValue& v) {
    out << "  " << label << " = " << gap_value_str(v) << "  ["
        << status_str(v.status) << "; " << v.source << "]";
    if (r.size && !v.infinite && v.status != BoundStatus::Unknown)
      out << "  vs sqrt|M|: " << ratio_string(v, *r.size);
    out << "\n";
  };
  line("gap  ", r.gap);
  line("ssgap", r.ssgap);
  line("faith", r.faith);
  return 0;
}

// --- rounded / h1 / ext ------------------------------------------------------

int run_rounded(const Options& o, std::ostream& out) {
  if (o.format == "csv")
    throw validation_error("rounded has no tabular output; use text or json");
  Family f = need_family(o);
  DiagramMonoid m(f, o.n);
  Roundedness r = roundedness(m);
  if (o.format == "json") {
    ordered_json j;
    stamp_json(o, j);
    j["family"] = family_name(f);
    j["n"] = o.n;
    j["left_classes"] = r.left_classes;
    j["right_classes"] = r.right_classes;
    j["left_rounded"] = r.left;
    j["right_rounded"] = r.right;
    j["null_rounded"] = r.null_rounded;
    j["well_rounded"] = r.well;
    emit_json(j, out);
    return 0;
  }
  stamp_text(o, out);
  out << family_name(f) << "_" << o.n << ": left classes " << r.left_classes
      << ", right classes " << r.right_classes << "; left-rounded "
      << (r.left ? "yes" : "no") << ", right-rounded "
      << (r.right ? "yes" : "no") << ", null-rounded "
      << (r.null_rounded ? "yes" : "no") << " => well-rounded "
      << (r.well ? "yes" : "no") << "\n";
  return 0;
}

int run_h1(const Options& o, std::ostream& out) {
  if (o.format == "csv")
    throw validation_error("h1 has no tabular output; use text or json");
  Family f = need_family(o);
  FieldSpec fs = need_field(o);
  DiagramMonoid m(f, o.n);
  size_t d = additive_hom_dim(m, fs);
  if (o.format == "json") {
    ordered_json j;
    stamp_json(o, j);
    j["family"] = family_name(f);
    j["n"] = o.n;
    j["field"] = fs.name();
    j["additive_hom_dim"] = d;
    emit_json(j, out);
    return 0;
  }
  stamp_text(o, out);
  out << "dim of additive homomorphisms " << family_name(f) << "_" << o.n
      << " -> " << fs.name() << ": " << d << "\n";
  return 0;
}

OneDimRep parse_rep(const std::string& s) {
  if (s == "trivial") return OneDimRep::Trivial;
  if (s == "units") return OneDimRep::UnitsIndicator;
  throw validation_error("one-dimensional rep must be 'trivial' or 'units'");
}

int run_ext(const Options& o, const std::string& x, const std::string& y,
            std::ostream& out) {
  if (o.format == "csv")
    throw validation_error("ext has no tabular output; use text or json");
  Family f = need_family(o);
  FieldSpec fs = need_field(o);
  DiagramMonoid m(f, o.n);
  size_t d = ext_dim(m, fs, parse_rep(x), parse_rep(y));
  if (o.format == "json") {
    ordered_json j;
    stamp_json(o, j);
    j["family"] = family_name(f);
    j["n"] = o.n;
    j["field"] = fs.name();
    j["x"] = x;
    j["y"] = y;
    j["ext_dim"] = d;
    emit_json(j, out);
    return 0;
  }
  stamp_text(o, out);
  out << "ext(" << x << ", " << y << ") over " << fs.name() << " for "
      << family_name(f) << "_" << o.n << ": " << d << "\n";
  return 0;
}

// --- period ------------------------------------------------------------------

int run_period(const Options& o, long element, const std::string& diagram,
               std::ostream& out) {
  if (o.format == "csv")
    throw validation_error("period has no tabular output; use text or json");
  Family f = need_family(o);
  DiagramMonoid m(f, o.n);
  size_t idx;
  if (!diagram.empty()) {
    idx = m.index_of(Diagram::parse(diagram));
  } else {
    if (element < 0 || static_cast<size_t>(element) >= m.size())
      throw validation_error("--element out of range (monoid has " +
                             std::to_string(m.size()) + " elements)");
    idx = static_cast<size_t>(element);
  }
  CellStructure cs = green_cells(m);
  DhReport r = dh_suitability(m, cs, idx);
  if (o.format == "json") {
    ordered_json j;
    stamp_json(o, j);
    j["family"] = family_name(f);
    j["n"] = o.n;
    j["element"] = ordered_json{{"index", r.element},
                                {"diagram", m.label(r.element)}};
    j["index"] = r.index;
    j["period"] = r.period;
    j["largest_prime"] = r.largest_prime;
    j["idempotent_power"] = ordered_json{{"index", r.idempotent},
                                         {"diagram", m.label(r.idempotent)}};
    j["h_cell_order"] = r.h_order.get_str();
    emit_json(j, out);
    return 0;
  }
  stamp_text(o, out);
  out << m.label(r.element) << " in " << family_name(f) << "_" << o.n
      << ": index " << r.index << ", period " << r.period
      << " (largest prime " << r.largest_prime << "), idempotent power "
      << m.label(r.idempotent) << ", |H(e)| = " << r.h_order.get_str()
      << " (period divides it)\n";
  return 0;
}

// --- truncate ----------------------------------------------------------------

int run_truncate(const Options& o, std::optional<int> low,
                 std::optional<int> high, std::ostream& out) {
  if (o.format == "csv")
    throw validation_error("truncate has no tabular output; use text or json");
  Family f = need_family(o);
  auto base = std::make_shared<DiagramMonoid>(f, o.n);
  CellStructure cs = green_cells(*base);
  std::optional<size_t> low_cell, high_cell;
  if (low) low_cell = need_cell_of_width(*base, cs, *low);
  if (high) high_cell = need_cell_of_width(*base, cs, *high);
  TruncationMonoid t = truncate(base, cs, low_cell, high_cell);
  if (o.format == "json") {
    ordered_json j;
    stamp_json(o, j);
    j["family"] = family_name(f);
    j["n"] = o.n;
    if (low) j["low_width"] = *low;
    if (high) j["high_width"] = *high;
    j["base_size"] = base->size();
    j["size"] = t.size();
    j["fresh_unit"] = t.has_fresh_unit();
    j["has_zero"] = t.has_zero();
    emit_json(j, out);
    return 0;
  }
  stamp_text(o, out);
  out << "truncation of " << family_name(f) << "_" << o.n;
  if (low) out << ", ideal of width " << *low;
  if (high) out << ", zero below width " << *high;
  out << ": " << t.size() << " elements (base " << base->size() << ")"
      << (t.has_fresh_unit() ? ", fresh unit" : "")
      << (t.has_zero() ? ", fresh zero" : "") << "\n";
  return 0;
}

// --- protocol ----------------------------------------------------------------

// Commuting generator split for SU: secrets of party A are words over
// low-index generators u_i/s_i (i <= a), secrets of party B over high-index
// ones (i >= a+2); indices two apart always commute.
void su_split(const DiagramMonoid& m, std::vector<size_t>& a_out,
              std::vector<size_t>& b_out) {
  Family f = m.family();
  int n = m.degree();
  if (f != Family::TL && f != Family::Brauer)
    throw validation_error(
        "protocol su defines commuting generator sets for tl and brauer "
        "only");
  if (n < 4)
    throw validation_error(
        "protocol su needs degree >= 4 to split the generators with a gap");
  int a = (n - 2) / 2;  // A gets indices 1..a, B gets a+2..n-1
  auto gens = family_generators(f, n);
  auto push = [&](std::vector<size_t>& dst, int i, int block) {
    dst.push_back(m.index_of(gens[static_cast<size_t>(block * (n - 1) + i - 1)]));
  };
  int blocks = (f == Family::Brauer) ? 2 : 1;  // brauer: s-block then u-block
  for (int block = 0; block < blocks; ++block) {
    for (int i = 1; i <= a; ++i) push(a_out, i, block);
    for (int i = a + 2; i <= n - 1; ++i) push(b_out, i, block);
  }
}

ordered_json element_json(const Monoid& m, size_t x) {
  return ordered_json{{"index", x}, {"diagram", m.label(x)}};
}

int run_protocol(const Options& o, const std::string& kind,
                 std::optional<int> trunc_low, std::ostream& out) {
  if (o.format == "csv")
    throw validation_error("protocol has no tabular output; use text or json");
  Family f = need_family(o);
  auto m = std::make_shared<DiagramMonoid>(f, o.n);
  SplitMix64 rng(o.seed);
  ProtocolSpec spec;
  std::vector<size_t> gens_a, gens_b;
  if (kind == "su") {
    su_split(*m, gens_a, gens_b);
    size_t g = trunc_low ? sample_ideal_element(*m, *trunc_low, rng)
                         : static_cast<size_t>(rng.uniform(m->size()));
    spec = make_su_spec(m, g, gens_a, gens_b, o.seed);
  } else {
    if (trunc_low)
      throw validation_error(
          "--truncate-low applies to su (the public g is drawn from the "
          "width ideal); stickel draws a noncommuting pair from the full "
          "monoid");
    auto [g, h] = sample_noncommuting_pair(*m, rng);
    spec = make_stickel_spec(m, g, h, o.seed);
  }
  Transcript t = (kind == "su") ? run_su(spec) : run_stickel(spec);
  std::string desc = std::string(family_name(f)) + "_" + std::to_string(o.n);
  if (trunc_low)
    desc += " with public g from the width<=" + std::to_string(*trunc_low) +
            " ideal";
  if (o.format == "json") {
    ordered_json j;
    stamp_json(o, j);
    j["protocol"] = t.protocol;
    j["seed"] = t.seed;
    j["monoid"] = ordered_json{{"description", desc},
                               {"family", family_name(f)},
                               {"n", o.n},
                               {"size", m->size()}};
    ordered_json pub;
    pub["g"] = element_json(*m, t.g);
    if (t.h) pub["h"] = element_json(*m, *t.h);
    if (kind == "su") {
      ordered_json ga = ordered_json::array(), gb = ordered_json::array();
      for (size_t x : gens_a) ga.push_back(element_json(*m, x));
      for (size_t x : gens_b) gb.push_back(element_json(*m, x));
      pub["gens_a"] = std::move(ga);
      pub["gens_b"] = std::move(gb);
    }
    j["public"] = std::move(pub);
    j["messages"] = ordered_json{{"a", element_json(*m, t.message_a)},
                                 {"b", element_json(*m, t.message_b)}};
    j["secrets"] = ordered_json{{"a", element_json(*m, t.secret_a)},
                                {"b", element_json(*m, t.secret_b)}};
    j["equal"] = t.equal;
    emit_json(j, out);
    return 0;
  }
  stamp_text(o, out);
  out << t.protocol << " over " << desc << ", seed " << t.seed << "\n";
  out << "  g        = " << m->label(t.g) << "\n";
  if (t.h) out << "  h        = " << m->label(*t.h) << "\n";
  if (kind == "su") {
    out << "  A gens   =";
    for (size_t x : gens_a) out << " " << m->label(x);
    out << "\n  B gens   =";
    for (size_t x : gens_b) out << " " << m->label(x);
    out << "\n";
  }
  out << "  msg A    = " << m->label(t.message_a) << "\n";
  out << "  msg B    = " << m->label(t.message_b) << "\n";
  out << "  secret A = " << m->label(t.secret_a) << "\n";
  out << "  secret B = " << m->label(t.secret_b) << "\n";
  out << "  equal    = " << (t.equal ? "yes" : "no") << "\n";
  return 0;
}

// --- selftest ----------------------------------------------------------------

int run_selftest(const Options& o, std::ostream& out) {
  if (o.format == "csv")
    throw validation_error("selftest has no tabular output; use text or json");
  auto results = run_acceptance();
  bool all = true;
  double total = 0;
  for (const auto& r : results) {
    all = all && r.pass;
    total += r.ms;
  }
  if (o.format == "json") {
    ordered_json j;
    stamp_json(o, j);
    ordered_json arr = ordered_json::array();
    for (const auto& r : results)
      arr.push_back(ordered_json{{"criterion", r.id},
                                 {"name", r.name},
                                 {"pass", r.pass},
                                 {"detail", r.detail},
                                 {"ms", r.ms}});
    j["criteria"] = std::move(arr);
    j["total_ms"] = total;
    j["pass"] = all;
    emit_json(j, out);
    return all ? 0 : 4;
  }
  stamp_text(o, out);
  for (const auto& r : results) {
    std::ostringstream line;
    line << "criterion " << std::setw(2) << r.id << ": "
         << (r.pass ? "PASS" : "FAIL") << " — " << r.name << " (" << r.detail
         << "; " << std::fixed << std::setprecision(0) << r.ms << " ms)";
    out << line.str() << "\n";
  }
  out << (all ? "all 14 criteria passed" : "ACCEPTANCE FAILURES PRESENT")
      << "; runtime " << std::fixed << std::setprecision(0) << total
      << " ms\n";
  return all ? 0 : 4;
}

}  // namespace

int cli_main(std::vector<std::string> args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"exact workbench for diagram monoids: cells, representation "
               "gaps, and monoid-based key exchange"};
  app.require_subcommand(1);

  Options o;
  app.add_option_function<int>(
      "--threads",
      [](int t) {
#ifdef _OPENMP
        if (t > 0) omp_set_num_threads(t);
#endif
        (void)t;
      },
      "cap the number of worker threads");
  app.add_flag("--timestamps", o.timestamps,
               "stamp output with the generation time (off by default so "
               "identical flags give identical bytes)");

  auto add_common = [&](CLI::App* sub, bool family, bool n, bool format) {
    if (family)
      sub->add_option("--family", o.family,
                      "tl, motzkin, brauer, prook, rook, rookbrauer, "
                      "ppartition, partition, sym")
          ->required();
    if (n) sub->add_option("--n", o.n, "degree")->required();
    if (format)
      sub->add_option("--format", o.format, "text, csv, or json")
          ->check(CLI::IsMember({"text", "csv", "json"}));
  };

  int rc = 0;

  // enumerate
  bool enum_elements = false;
  long enum_guard = 0;
  auto* c_enum = app.add_subcommand(
      "enumerate", "enumerate a family and check the closed-form cardinality");
  add_common(c_enum, true, true, true);
  c_enum->add_flag("--elements", enum_elements, "list every element");
  c_enum->add_option("--max-elements", enum_guard,
                     "resource guard (default 3000000)");
  c_enum->callback(
      [&] { rc = run_enumerate(o, enum_elements, enum_guard, out); });

  // cells
  auto* c_cells =
      app.add_subcommand("cells", "Green's cell structure (eggbox shapes)");
  add_common(c_cells, true, true, true);
  c_cells->callback([&] { rc = run_cells(o, out); });

  // dims
  auto* c_dims = app.add_subcommand(
      "dims", "exact simple-module dimension table (Temperley-Lieb)");
  add_common(c_dims, true, true, true);
  c_dims->add_option("--char", o.characteristic,
                     "field characteristic (0 or a prime)");
  c_dims->callback([&] { rc = run_dims(o, out); });

  // ssdims
  auto* c_ss = app.add_subcommand(
      "ssdims", "semisimple (cell-module) dimension table, any family");
  add_common(c_ss, true, true, true);
  c_ss->callback([&] { rc = run_ssdims(o, out); });

  // gram
  bool rank_only = false;
  auto* c_gram =
      app.add_subcommand("gram", "Gram matrix and rank at an apex width");
  add_common(c_gram, true, true, true);
  c_gram->add_option("--k", o.k, "apex width")->required();
  c_gram->add_option("--char", o.characteristic,
                     "field characteristic (0 or a prime)");
  c_gram->add_flag("--rank-only", rank_only, "omit the matrix entries");
  c_gram->callback([&] { rc = run_gram(o, rank_only, out); });

  // gap
  long cyclic = 0, fq_deg = 1;
  bool faithful = false, semisimple = false;
  std::optional<long> gap_trunc;
  long gap_trunc_raw = -1;
  auto* c_gap = app.add_subcommand(
      "gap", "exact representation gap (tl, prook, or --cyclic)");
  c_gap->add_option("--family", o.family, "tl or prook");
  c_gap->add_option("--n", o.n, "degree");
  c_gap->add_option("--char", o.characteristic,
                    "field characteristic (0 or a prime)");
  c_gap->add_option("--cyclic", cyclic, "use the cyclic group Z/n instead");
  c_gap->add_option("--deg", fq_deg, "field degree over F_p (with --cyclic)");
  c_gap->add_flag("--faithful", faithful,
                  "minimal faithful dimension instead of the gap");
  c_gap->add_flag("--semisimple", semisimple,
                  "semisimple gap (planar families)");
  c_gap->add_option("--truncate-low", gap_trunc_raw,
                    "truncate to the ideal of this width plus a fresh unit");
  c_gap->add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  c_gap->callback([&] {
    if (gap_trunc_raw >= 0) gap_trunc = gap_trunc_raw;
    if (cyclic == 0 && o.family.empty())
      throw validation_error("gap needs --family or --cyclic");
    rc = run_gap(o, cyclic, faithful, semisimple, fq_deg, gap_trunc, out);
  });

  // bounds
  long bounds_trunc_raw = -1;
  auto* c_bounds = app.add_subcommand(
      "bounds", "theorem-driven gap/ssgap/faith report with statuses");
  add_common(c_bounds, true, true, true);
  c_bounds->add_option("--char", o.characteristic,
                       "field characteristic (0 or a prime)");
  c_bounds->add_option("--truncate-low", bounds_trunc_raw,
                       "truncation width (default 2*sqrt(n))");
  c_bounds->callback([&] {
    std::optional<long> t;
    if (bounds_trunc_raw >= 0) t = bounds_trunc_raw;
    rc = run_bounds(o, t, out);
  });

  // rounded
  auto* c_round =
      app.add_subcommand("rounded", "left/right/null/well-roundedness");
  add_common(c_round, true, true, true);
  c_round->callback([&] { rc = run_rounded(o, out); });

  // h1
  auto* c_h1 = app.add_subcommand(
      "h1", "dimension of additive homomorphisms into the field");
  add_common(c_h1, true, true, true);
  c_h1->add_option("--char", o.characteristic,
                   "field characteristic (0 or a prime)");
  c_h1->callback([&] { rc = run_h1(o, out); });

  // ext
  std::string ext_x = "trivial", ext_y = "trivial";
  auto* c_ext = app.add_subcommand(
      "ext", "dimension of first extensions between one-dimensional reps");
  add_common(c_ext, true, true, true);
  c_ext->add_option("--char", o.characteristic,
                    "field characteristic (0 or a prime)");
  c_ext->add_option("--x", ext_x, "trivial or units");
  c_ext->add_option("--y", ext_y, "trivial or units");
  c_ext->callback([&] { rc = run_ext(o, ext_x, ext_y, out); });

  // period
  long per_element = -1;
  std::string per_diagram;
  auto* c_per = app.add_subcommand(
      "period", "index/period and the H-cell order the period divides");
  add_common(c_per, true, true, true);
  c_per->add_option("--element", per_element, "element index");
  c_per->add_option("--diagram", per_diagram,
                    "element as a serialized diagram");
  c_per->callback([&] {
    if (per_element < 0 && per_diagram.empty())
      throw validation_error("period needs --element or --diagram");
    rc = run_period(o, per_element, per_diagram, out);
  });

  // truncate
  int tr_low = -1, tr_high = -1;
  auto* c_tr = app.add_subcommand(
      "truncate", "Rees subquotient along the J-order (by apex width)");
  add_common(c_tr, true, true, true);
  c_tr->add_option("--low", tr_low,
                   "keep the ideal of this width, adjoin a fresh unit");
  c_tr->add_option("--high", tr_high,
                   "crush cells strictly below this width to a zero");
  c_tr->callback([&] {
    std::optional<int> lo, hi;
    if (tr_low >= 0) lo = tr_low;
    if (tr_high >= 0) hi = tr_high;
    rc = run_truncate(o, lo, hi, out);
  });

  // protocol
  std::string proto_kind;
  int proto_trunc = -1;
  auto* c_proto = app.add_subcommand(
      "protocol", "run a seeded key-exchange and print the transcript");
  c_proto->add_option("kind", proto_kind, "su or stickel")
      ->required()
      ->check(CLI::IsMember({"su", "stickel"}));
  add_common(c_proto, true, true, true);
  c_proto->add_option("--seed", o.seed, "rng seed (recorded in transcript)");
  c_proto->add_option("--truncate-low", proto_trunc,
                      "draw the public g from the ideal of this width (su)");
  c_proto->callback([&] {
    std::optional<int> t;
    if (proto_trunc >= 0) t = proto_trunc;
    rc = run_protocol(o, proto_kind, t, out);
  });

  // selftest
  auto* c_self = app.add_subcommand(
      "selftest", "run the acceptance suite; nonzero exit on failure");
  c_self->add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  c_self->callback([&] { rc = run_selftest(o, out); });

  for (CLI::App* s : app.get_subcommands([](CLI::App*) { return true; }))
    s->fallthrough();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const resource_error& e) {
    err << "resource guard: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}

}  // namespace dmw
