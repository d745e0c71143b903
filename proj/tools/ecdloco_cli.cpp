// Command-line front end: table generation, encode/decode, simulation, rates
// and the quadratic R(m) fit.

#include <cstdlib>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include "CLI11.hpp"
#include "ecdloco/simlab.hpp"

using namespace ecdloco;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ResidueTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open table file " + path);
  return deserialize(in);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

Bits hex_to_bits(const std::string& hex) {
  Bits b;
  for (char c : hex) {
    int v;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
    else throw UsageError(std::string("bad hex digit '") + c + "'");
    for (int k = 3; k >= 0; --k) b.push_back((v >> k) & 1);
  }
  return b;
}

Bits bytes_to_bits(const std::string& bytes) {
  Bits b;
  for (unsigned char c : bytes) {
    for (int k = 7; k >= 0; --k) b.push_back((c >> k) & 1);
  }
  return b;
}

std::vector<Bits> chunk(const Bits& all, int width, bool pad) {
  if (width <= 0) throw UsageError("table has no message bits");
  if (!pad && all.size() % static_cast<std::size_t>(width) != 0) {
    throw UsageError("bit count is not a multiple of msg_bits = " + std::to_string(width));
  }
  std::vector<Bits> out;
  for (std::size_t k = 0; k < all.size(); k += static_cast<std::size_t>(width)) {
    Bits c(all.begin() + static_cast<std::ptrdiff_t>(k),
           all.begin() + static_cast<std::ptrdiff_t>(std::min(all.size(), k + static_cast<std::size_t>(width))));
    c.resize(static_cast<std::size_t>(width), false);
    out.push_back(std::move(c));
  }
  return out;
}

// "17,27,33", "5-9" or "5-61:2"
std::vector<int> parse_int_list(const std::string& text) {
  auto number = [](const std::string& t) {
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos) throw UsageError("bad length '" + t + "'");
    return std::stoi(t);
  };
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto dash = tok.find('-');
    if (dash != std::string::npos) {
      const auto colon = tok.find(':', dash);
      const int a = number(tok.substr(0, dash));
      const int b = number(tok.substr(dash + 1, colon == std::string::npos ? std::string::npos : colon - dash - 1));
      const int step = colon == std::string::npos ? 1 : number(tok.substr(colon + 1));
      if (step < 1) throw UsageError("step must be positive");
      for (int m = a; m <= b; m += step) out.push_back(m);
    } else {
      out.push_back(number(tok));
    }
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

std::string strip(std::string s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* t = std::getenv("LOCO_THREADS")) {
    const int n = std::atoi(t);
    if (n > 0) omp_set_num_threads(n);
  }

  CLI::App app{"EC D-LOCO codec: constrained DNA codes with residue decoding"};
  app.require_subcommand(1);

  // tables
  int t_m = 0, t_ell = 2;
  std::string t_mode = "relaxed", t_out;
  auto* tables = app.add_subcommand("tables", "search R and write the residue table");
  tables->add_option("--m", t_m, "code length")->required();
  tables->add_option("--ell", t_ell, "maximum run length (1..3)");
  tables->add_option("--mode", t_mode, "strict | relaxed | exact")
      ->check(CLI::IsMember({"strict", "relaxed", "exact"}));
  tables->add_option("--out,-o", t_out, "output file (default stdout)");

  // encode
  std::string e_table, e_bits, e_hex, e_in, e_out;
  auto* encode = app.add_subcommand("encode", "encode a message into a DNA strand");
  encode->add_option("--table", e_table, "residue table file")->required();
  auto* e_g = encode->add_option_group("message");
  e_g->add_option("--bits", e_bits, "message as 0/1 text, length a multiple of msg_bits");
  e_g->add_option("--hex", e_hex, "message as hex, zero-padded to whole chunks");
  e_g->add_option("--in", e_in, "binary message file, zero-padded to whole chunks");
  e_g->require_option(1);
  encode->add_option("--out,-o", e_out, "output DNA text (default stdout)");

  // decode
  std::string d_table, d_strand, d_in, d_out, d_status;
  bool d_allow = false;
  std::uint64_t d_seed = 0;
  auto* decode = app.add_subcommand("decode", "decode a DNA strand");
  decode->add_option("--table", d_table, "residue table file")->required();
  auto* d_g = decode->add_option_group("strand");
  d_g->add_option("--strand", d_strand, "DNA text");
  d_g->add_option("--in", d_in, "DNA text file");
  d_g->require_option(1);
  decode->add_option("--out,-o", d_out, "message bits output (default stdout)");
  decode->add_option("--status", d_status, "per-segment status CSV");
  decode->add_option("--seed", d_seed, "seed for random list picks");
  decode->add_flag("--allow-failures", d_allow, "exit 0 even if a segment fails");

  // simulate
  std::string s_table, s_out;
  int s_errors = 2;
  std::uint64_t s_trials = 1000;
  std::uint64_t s_seed = 0;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo substitution experiment");
  simulate->add_option("--table", s_table, "residue table file")->required();
  simulate->add_option("--errors", s_errors, "substitutions per codeword (1 or 2)")->check(CLI::Range(1, 2));
  simulate->add_option("--trials", s_trials, "number of trials");
  auto* seed_opt = simulate->add_option("--seed", s_seed, "experiment seed (random if omitted)");
  simulate->add_option("--out,-o", s_out, "CSV report (default stdout)");

  // rates
  int r_ell = 2;
  std::string r_m, r_out;
  bool r_exact = false;
  auto* rates = app.add_subcommand("rates", "R, message bits and rate for a list of lengths");
  rates->add_option("--ell", r_ell, "maximum run length");
  rates->add_option("--m", r_m, "lengths, e.g. 17,27,33, 5-9 or 5-61:2")->required();
  rates->add_flag("--exact", r_exact, "use the exact error set");
  rates->add_option("--out,-o", r_out, "CSV output (default stdout)");

  // fit
  std::string f_in;
  auto* fit = app.add_subcommand("fit", "least-squares quadratic R(m) from a CSV with m and R columns");
  fit->add_option("--in", f_in, "CSV file (e.g. output of rates)")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*tables) {
      const CodeParams p(t_m, t_ell);
      const bool exact = t_mode == "exact";
      const auto errors = default_error_set(p, exact);
      const auto mode = t_mode == "strict" ? SearchMode::Strict : SearchMode::Relaxed;
      const ResidueTable t = make_table(errors, p, mode);
      write_output(t_out, serialize(t));
      std::cerr << "m=" << t.m << " ell=" << t.ell << " R=" << t.R << " msg_bits=" << t.msg_bits
                << " entries=" << t.entries.size() << '\n';
      return 0;
    }
    if (*encode) {
      const ResidueTable t = load_table(e_table);
      const CodeParams p(t.m, t.ell);
      std::vector<Bits> msgs;
      if (!e_bits.empty()) msgs = chunk(bits_from_string(strip(e_bits)), t.msg_bits, false);
      else if (!e_hex.empty()) msgs = chunk(hex_to_bits(strip(e_hex)), t.msg_bits, true);
      else msgs = chunk(bytes_to_bits(read_file(e_in)), t.msg_bits, true);
      write_output(e_out, assemble_strand(msgs, p, t) + "\n");
      return 0;
    }
    if (*decode) {
      const ResidueTable t = load_table(d_table);
      const CodeParams p(t.m, t.ell);
      const std::string strand = strip(d_in.empty() ? d_strand : read_file(d_in));
      const std::size_t seg = static_cast<std::size_t>(t.m) + 3;
      if (strand.empty() || strand.size() % seg != 0) {
        throw UsageError("strand length " + std::to_string(strand.size()) + " is not a multiple of m+3 = " +
                         std::to_string(seg));
      }
      const Decoder dec(p, t);
      const std::size_t k = strand.size() / seg;
      std::vector<DecodeResult> res(k);
#pragma omp parallel for schedule(dynamic)
      for (std::int64_t j = 0; j < static_cast<std::int64_t>(k); ++j) {
        res[static_cast<std::size_t>(j)] =
            dec.decode(std::string_view(strand).substr(static_cast<std::size_t>(j) * seg, seg),
                       d_seed + static_cast<std::uint64_t>(j));
      }
      std::string bits;
      std::ostringstream status;
      status << "segment,status,index,list_size\n";
      bool failed = false;
      for (std::size_t j = 0; j < k; ++j) {
        failed |= !res[j].ok();
        bits += bits_to_string(res[j].message);
        status << j << ',' << to_string(res[j].status) << ',' << res[j].index << ',' << res[j].list_size << '\n';
      }
      write_output(d_out, bits + "\n");
      if (!d_status.empty()) write_output(d_status, status.str());
      if (failed && !d_allow) {
        std::cerr << "decode: at least one segment failed\n";
        return 3;
      }
      return 0;
    }
    if (*simulate) {
      const ResidueTable t = load_table(s_table);
      const CodeParams p(t.m, t.ell);
      if (seed_opt->count() == 0) s_seed = std::random_device{}();
      std::cerr << "seed=" << s_seed << '\n';
      std::ostringstream os;
      if (s_errors == 2) {
        const auto rep = run_double_experiment(p, t, s_trials, s_seed);
        write_csv(rep, os);
      } else {
        const auto rep = run_single_sampled(p, t, s_trials, s_seed);
        os << "m,ell,R,trials,seed,success_pre,success_post,p1p2,runtime_s\n";
        os << t.m << ',' << t.ell << ',' << t.R << ',' << rep.total << ',' << s_seed << ',' << rep.success_rate()
           << ',' << rep.success_rate() << ",0," << rep.runtime_s << '\n';
        os << "list_size,count\n";
      }
      write_output(s_out, os.str());
      return 0;
    }
    if (*rates) {
      std::ostringstream os;
      os << "m,R,msg_bits,rate\n";
      for (const auto& row : rates_table(r_ell, parse_int_list(r_m), r_exact)) {
        os << row.m << ',' << row.R << ',' << row.msg_bits << ',' << std::fixed << std::setprecision(4) << row.rate
           << std::defaultfloat << '\n';
      }
      write_output(r_out, os.str());
      return 0;
    }
    if (*fit) {
      std::istringstream in(read_file(f_in));
      std::string line;
      if (!std::getline(in, line)) throw UsageError("fit: empty CSV");
      std::vector<std::string> cols;
      {
        std::stringstream hs(line);
        std::string c;
        while (std::getline(hs, c, ',')) cols.push_back(strip(c));
      }
      int im = -1, ir = -1;
      for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c] == "m") im = static_cast<int>(c);
        if (cols[c] == "R") ir = static_cast<int>(c);
      }
      if (im < 0 || ir < 0) throw UsageError("fit: CSV header needs m and R columns");
      std::vector<std::pair<double, double>> pts;
      int no = 1;
      while (std::getline(in, line)) {
        ++no;
        if (strip(line).empty()) continue;
        std::vector<std::string> f;
        std::stringstream ls(line);
        std::string c;
        while (std::getline(ls, c, ',')) f.push_back(c);
        if (f.size() != cols.size()) throw UsageError("fit: line " + std::to_string(no) + " has wrong field count");
        try {
          pts.emplace_back(std::stod(f[static_cast<std::size_t>(im)]), std::stod(f[static_cast<std::size_t>(ir)]));
        } catch (const std::exception&) {
          throw UsageError("fit: line " + std::to_string(no) + " is not numeric");
        }
      }
      const ModelFit mf = fit_quadratic(pts);
      std::cout << std::setprecision(8) << "a2=" << mf.a2 << " a1=" << mf.a1 << " a0=" << mf.a0
                << " nrmse=" << mf.nrmse << '\n';
      return 0;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 2;
  }
  return 0;
}
