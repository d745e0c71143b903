#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ecdloco/redundancy.hpp"

namespace ecdloco {

int message_bits(const CodeParams& params, std::uint64_t R) {
  if (R < 2) throw std::invalid_argument("message_bits: R must be >= 2");
  const BigInt q = params.last_index() / R + 1;
  return static_cast<int>(bit_length(q)) - 1;
}

ResidueTable build_table(const IndexErrorSet& errors, const CodeParams& params, std::uint64_t R) {
  const ErrorResidues errs(errors, params);
  FeasibilityScratch scratch;
  if (!scratch.relaxed(errs, R)) throw std::invalid_argument("build_table: R is not feasible for the error set");

  // Group signed candidates per residue: location code, or -1 once any member
  // has several locations.
  std::map<std::uint64_t, std::pair<int, std::size_t>> groups;  // residue -> (loc, first + error)
  auto join = [&](std::uint64_t r, int loc) {
    auto [it, fresh] = groups.try_emplace(r, loc, 0);
    if (!fresh && it->second.first != loc) it->second.first = -1;
  };
  for (std::size_t k = 0; k < errs.size(); ++k) {
    const std::uint64_t a = errs.residue(k, R);
    join(a, errs.location(k));
    join(R - a, errs.location(k));
  }

  ResidueTable t;
  t.m = params.m();
  t.ell = params.ell();
  t.R = R;
  t.phi_n1 = errs.last_index_residue(R);
  t.msg_bits = message_bits(params, R);
  for (std::size_t k = 0; k < errs.size(); ++k) {
    const std::uint64_t a = errs.residue(k, R);
    const int loc = groups.at(a).first;
    t.entries[a] = loc >= 0 ? TableEntry::at(loc) : TableEntry::value_of(errs.value(k));
  }
  return t;
}

IndexErrorSet default_error_set(const CodeParams& params, bool exact) {
  if (exact || params.ell() == 3) return window_diffs(params);
  if (params.ell() == 1) return superset_l1(params);
  if (params.ell() == 2) return superset_l2(params);
  throw std::invalid_argument("no error-set generator for ell > 3");
}

ResidueTable make_table(const IndexErrorSet& errors, const CodeParams& params, SearchMode mode) {
  return build_table(errors, params, find_R(errors, params, mode));
}

void serialize(const ResidueTable& t, std::ostream& out) {
  out << "#ecdloco-table v1\n";
  out << "m=" << t.m << " ell=" << t.ell << " R=" << t.R << " phiN1=" << t.phi_n1 << " msgbits=" << t.msg_bits
      << '\n';
  for (const auto& [r, e] : t.entries) {
    out << "entry " << r << ' ';
    if (e.kind == TableEntry::Kind::Location) {
      out << "loc " << e.location;
    } else {
      out << "err " << e.error;
    }
    out << '\n';
  }
}

std::string serialize(const ResidueTable& t) {
  std::ostringstream os;
  serialize(t, os);
  return os.str();
}

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw std::invalid_argument("table line " + std::to_string(line) + ": " + what);
}

std::uint64_t parse_u64(const std::string& s, int line) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) fail(line, "bad number '" + s + "'");
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    fail(line, "number out of range '" + s + "'");
  }
}

std::string field(const std::string& tok, const std::string& key, int line) {
  if (tok.rfind(key + "=", 0) != 0) fail(line, "expected " + key + "=");
  return tok.substr(key.size() + 1);
}

}  // namespace

ResidueTable deserialize(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (text.empty() || text.back() != '\n') fail(1, "missing trailing newline");
  std::istringstream lines(text);
  std::string line;
  int no = 0;
  ResidueTable t;

  if (!std::getline(lines, line) || line != "#ecdloco-table v1") fail(1, "bad header");
  ++no;
  if (!std::getline(lines, line)) fail(2, "missing parameter line");
  ++no;
  {
    std::istringstream ls(line);
    std::string a, b, c, d, e, extra;
    if (!(ls >> a >> b >> c >> d >> e) || (ls >> extra)) fail(no, "expected 5 fields");
    t.m = static_cast<int>(parse_u64(field(a, "m", no), no));
    t.ell = static_cast<int>(parse_u64(field(b, "ell", no), no));
    t.R = parse_u64(field(c, "R", no), no);
    t.phi_n1 = parse_u64(field(d, "phiN1", no), no);
    t.msg_bits = static_cast<int>(parse_u64(field(e, "msgbits", no), no));
    if (t.m < 1 || t.ell < 1 || t.ell > t.m) fail(no, "invalid m/ell");
    if (t.R < 2) fail(no, "R must be >= 2");
    if (t.phi_n1 == 0 || t.phi_n1 >= t.R) fail(no, "phiN1 outside [1, R)");
  }
  std::uint64_t prev = 0;
  while (std::getline(lines, line)) {
    ++no;
    std::istringstream ls(line);
    std::string kw, res, kind, val, extra;
    if (!(ls >> kw >> res >> kind >> val) || (ls >> extra) || kw != "entry") fail(no, "expected 'entry <r> loc|err <v>'");
    const std::uint64_t r = parse_u64(res, no);
    if (r == 0 || r >= t.R || r == t.phi_n1) fail(no, "residue not allowed as key");
    if (!t.entries.empty() && r <= prev) fail(no, "entries not ascending");
    prev = r;
    if (kind == "loc") {
      const std::uint64_t i = parse_u64(val, no);
      if (i >= static_cast<std::uint64_t>(t.m)) fail(no, "location outside [0, m)");
      t.entries[r] = TableEntry::at(static_cast<int>(i));
    } else if (kind == "err") {
      BigInt e;
      try {
        e = parse_decimal(val);
      } catch (const std::invalid_argument&) {
        fail(no, "bad error value");
      }
      if (e <= 0) fail(no, "error value must be positive");
      if (phi(e, t.R) != r) fail(no, "error value does not reduce to its residue");
      t.entries[r] = TableEntry::value_of(std::move(e));
    } else {
      fail(no, "entry kind must be loc or err");
    }
  }
  return t;
}

ResidueTable deserialize_string(const std::string& text) {
  std::istringstream in(text);
  return deserialize(in);
}

std::uint64_t table_bits(std::size_t entries, int m, std::uint64_t R) {
  const std::uint64_t w = bit_length(BigInt(m)) + bit_length(BigInt(R));
  return static_cast<std::uint64_t>(entries) * w;
}

StorageBits storage_bits(std::size_t entries, const CodeParams& params, std::uint64_t R) {
  StorageBits s;
  s.table = table_bits(entries, params.m(), R);
  for (int i = 0; i < params.m(); ++i) s.cardinalities += bit_length(params.scaled(i));
  s.residues = static_cast<std::uint64_t>(params.m() + 1) * bit_length(BigInt(R));
  return s;
}

StorageBits storage_bits(const ResidueTable& table) {
  return storage_bits(table.entries.size(), CodeParams(table.m, table.ell), table.R);
}

}  // namespace ecdloco
