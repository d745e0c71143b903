#include "ecdloco/simlab.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <ostream>
#include <stdexcept>

#include <omp.h>

namespace ecdloco {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

constexpr std::size_t kStatusCount = 6;

struct Tally {
  std::uint64_t total = 0;
  std::uint64_t success = 0;
  std::array<std::uint64_t, kStatusCount> statuses{};
};

void record(Tally& t, const DecodeResult& res, const BigInt& want) {
  ++t.total;
  ++t.statuses[static_cast<std::size_t>(res.status)];
  const bool single_path = res.status != DecodeStatus::DoubleListDecoded && res.status != DecodeStatus::Failure;
  if (single_path && res.index == want) ++t.success;
}

void decode_all_substitutions(const Decoder& dec, const Word& dc, bool comp, const BigInt& want, bool clean,
                              Tally& t) {
  const Bridge b = make_bridge(dc, comp, Symbol::A, dec.params().ell());
  std::vector<Symbol> seg = Concatenable{dc, b}.symbols();
  if (clean) record(t, dec.decode(std::span<const Symbol>(seg)), want);
  for (std::size_t k = 0; k < seg.size(); ++k) {
    const Symbol orig = seg[k];
    for (int s = 0; s < 4; ++s) {
      if (symbol_from(s) == orig) continue;
      seg[k] = symbol_from(s);
      record(t, dec.decode(std::span<const Symbol>(seg)), want);
    }
    seg[k] = orig;
  }
}

SingleReport to_report(const std::vector<Tally>& parts, double runtime) {
  SingleReport rep;
  for (const Tally& t : parts) {
    rep.total += t.total;
    rep.success += t.success;
    for (std::size_t s = 0; s < kStatusCount; ++s) {
      if (t.statuses[s]) rep.statuses[static_cast<DecodeStatus>(s)] += t.statuses[s];
    }
  }
  rep.runtime_s = runtime;
  return rep;
}

}  // namespace

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t t) {
  return std::mt19937_64(mix(mix(seed) ^ mix(t + 0x632BE59BD9B4E019ull)));
}

Word apply_substitutions(const Word& w, int k, std::mt19937_64& rng) {
  if (k < 0 || static_cast<std::size_t>(k) > w.size()) throw std::invalid_argument("more substitutions than symbols");
  std::vector<std::size_t> pos(w.size());
  for (std::size_t p = 0; p < pos.size(); ++p) pos[p] = p;
  Word out = w;
  for (int j = 0; j < k; ++j) {
    std::uniform_int_distribution<std::size_t> pick(static_cast<std::size_t>(j), pos.size() - 1);
    std::swap(pos[static_cast<std::size_t>(j)], pos[pick(rng)]);
    const std::size_t p = pos[static_cast<std::size_t>(j)];
    std::uniform_int_distribution<int> shift(1, 3);
    out[p] = symbol_from(value(w[p]) + shift(rng));
  }
  return out;
}

Bits random_message(int bits, std::mt19937_64& rng) {
  Bits b(static_cast<std::size_t>(bits));
  std::bernoulli_distribution coin(0.5);
  for (auto&& x : b) x = coin(rng);
  return b;
}

SingleReport run_single_exhaustive(const CodeParams& params, const ResidueTable& table, bool include_clean) {
  const auto t0 = std::chrono::steady_clock::now();
  const Decoder dec(params, table);
  const BigInt count = (params.last_index() / table.R) + 1;  // EC codewords 0, R, 2R, ...
  const auto n = static_cast<std::int64_t>(count);
  std::vector<Tally> parts(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t k = 0; k < n; ++k) {
    Tally& t = parts[static_cast<std::size_t>(omp_get_thread_num())];
    const BigInt idx = BigInt(k) * table.R;
    const Word d = unrank(idx, params);
    decode_all_substitutions(dec, d, false, idx, include_clean, t);
    decode_all_substitutions(dec, complement_word(d), true, idx, include_clean, t);
  }
  return to_report(parts, seconds_since(t0));
}

SingleReport run_single_sampled(const CodeParams& params, const ResidueTable& table, std::uint64_t trials,
                                std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  const Decoder dec(params, table);
  const int m = params.m();
  std::vector<Tally> parts(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(trials); ++t) {
    Tally& tally = parts[static_cast<std::size_t>(omp_get_thread_num())];
    auto rng = trial_rng(seed, static_cast<std::uint64_t>(t));
    auto [idx, d] = ec_encode(random_message(table.msg_bits, rng), params, table);
    const bool comp = std::bernoulli_distribution(0.5)(rng);
    const Word dc = comp ? complement_word(d) : d;
    const Symbol next = symbol_from(std::uniform_int_distribution<int>(0, 3)(rng));
    std::vector<Symbol> seg = Concatenable{dc, make_bridge(dc, comp, next, params.ell())}.symbols();
    const auto k = std::uniform_int_distribution<std::size_t>(0, static_cast<std::size_t>(m) + 2)(rng);
    seg[k] = symbol_from(value(seg[k]) + std::uniform_int_distribution<int>(1, 3)(rng));
    record(tally, dec.decode(std::span<const Symbol>(seg), rng()), idx);
  }
  return to_report(parts, seconds_since(t0));
}

namespace {

struct TrialOutcome {
  std::uint64_t samples = 0;
  std::uint64_t p1 = 0;
  bool p2 = false;
  bool reached_list = false;
  bool pre = false;
  bool post = false;
  bool miss = false;
  int list_size = 0;
  int bf_size = 0;
  bool bf_has_d = false;
};

// EC codewords at Hamming distance 2 from v with the given checksum.
int brute_force_list(const Word& v, Symbol target, const CodeParams& params, const ResidueRanker& ranker,
                     const Word& d, bool& contains_d) {
  const int m = params.m();
  const int ell = params.ell();
  const int delta = ((value(target) - value(checksum(v, ell))) % 4 + 4) % 4;
  auto weight = [&](int j) { return (ell == 1 && j == 0) ? 0 : 1; };  // position 0 is outside the ell=1 checksum
  int count = 0;
  contains_d = false;
  Word u = v;
  for (int j1 = 0; j1 < m; ++j1) {
    for (int j2 = j1 + 1; j2 < m; ++j2) {
      for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 3; ++b) {
          if ((a * weight(j1) + b * weight(j2)) % 4 != delta) continue;
          u[static_cast<std::size_t>(j1)] = symbol_from(value(v[static_cast<std::size_t>(j1)]) + a);
          u[static_cast<std::size_t>(j2)] = symbol_from(value(v[static_cast<std::size_t>(j2)]) + b);
          if (is_codeword(u, ell) && ranker.residue(u) == 0) {
            ++count;
            if (u == d) contains_d = true;
          }
        }
      }
      u[static_cast<std::size_t>(j2)] = v[static_cast<std::size_t>(j2)];
    }
    u[static_cast<std::size_t>(j1)] = v[static_cast<std::size_t>(j1)];
  }
  return count;
}

}  // namespace

ExperimentReport run_double_experiment(const CodeParams& params, const ResidueTable& table, std::uint64_t trials,
                                       std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const auto t0 = std::chrono::steady_clock::now();
  const Decoder dec(params, table);
  const ResidueRanker ranker(params, table.R);
  const int ell = params.ell();
  std::vector<TrialOutcome> out(static_cast<std::size_t>(trials));

#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(trials); ++t) {
    TrialOutcome& o = out[static_cast<std::size_t>(t)];
    auto rng = trial_rng(seed, static_cast<std::uint64_t>(t));
    auto [idx, d] = ec_encode(random_message(table.msg_bits, rng), params, table);
    const bool comp = std::bernoulli_distribution(0.5)(rng);
    const Word dc = comp ? complement_word(d) : d;
    const Bridge bridge = make_bridge(dc, comp, symbol_from(std::uniform_int_distribution<int>(0, 3)(rng)), ell);
    Word w;
    for (;;) {
      w = apply_substitutions(dc, 2, rng);
      ++o.samples;
      if (is_codeword(w, ell)) {
        const std::uint64_t r = ranker.residue(w);
        if (r == 0 || r == table.phi_n1) {
          ++o.p1;
          continue;
        }
      }
      break;
    }
    const DecodeResult res = dec.decode(w, bridge, rng());
    o.p2 = res.status == DecodeStatus::SingleCorrectedCodeword || res.status == DecodeStatus::SingleCorrectedNonCodeword;
    o.reached_list = res.status == DecodeStatus::DoubleListDecoded || res.status == DecodeStatus::Failure;
    o.post = res.ok() && res.index == idx;
    o.pre = res.status == DecodeStatus::DoubleListDecoded && res.list_size == 1 && res.index == idx;

    // Lists for the statistics, taken in the orientation of the trusted marker.
    const Word v = comp ? complement_word(w) : w;
    const Symbol target = comp ? complemented_checksum(bridge.l3, params.m(), ell) : bridge.l3;
    const auto list = dec.list_decode(v, target);
    o.list_size = static_cast<int>(list.size());
    o.miss = std::find(list.begin(), list.end(), d) == list.end();
    o.bf_size = brute_force_list(v, target, params, ranker, d, o.bf_has_d);
  }

  ExperimentReport rep;
  rep.m = params.m();
  rep.ell = ell;
  rep.R = table.R;
  rep.trials = trials;
  rep.seed = seed;
  for (const TrialOutcome& o : out) {
    rep.samples += o.samples;
    rep.p1_events += o.p1;
    rep.p2_events += o.p2;
    rep.reached_list += o.reached_list;
    rep.success_pre += o.pre;
    rep.success_post += o.post;
    rep.list_misses += o.miss;
    ++rep.list_sizes[o.list_size];
    // brute-force listing replaces the list decoder, so it only sees trials reaching that stage
    if (o.reached_list && o.bf_has_d) {
      rep.bf_success_pre += o.bf_size == 1;
      rep.bf_expected_post += 1.0 / o.bf_size;
    }
    if (!o.miss) rep.list_expected_post += 1.0 / o.list_size;
  }
  rep.runtime_s = seconds_since(t0);
  return rep;
}

double ExperimentReport::p1_plus_p2() const noexcept {
  const double p1 = samples ? static_cast<double>(p1_events) / static_cast<double>(samples) : 0.0;
  return p1 + ratio(p2_events);
}

void write_csv(const ExperimentReport& r, std::ostream& out) {
  out << "m,ell,R,trials,seed,success_pre,success_post,p1p2,runtime_s\n";
  out << r.m << ',' << r.ell << ',' << r.R << ',' << r.trials << ',' << r.seed << ',' << r.rate_pre() << ','
      << r.rate_post() << ',' << r.p1_plus_p2() << ',' << r.runtime_s << '\n';
  out << "list_size,count\n";
  for (const auto& [size, count] : r.list_sizes) out << size << ',' << count << '\n';
}

RateRow rate_row(const CodeParams& params, std::uint64_t R) {
  RateRow row;
  row.m = params.m();
  row.R = R;
  row.msg_bits = message_bits(params, R);
  row.rate = static_cast<double>(row.msg_bits) / static_cast<double>(params.m() + 3);
  return row;
}

std::vector<RateRow> rates_table(int ell, const std::vector<int>& m_list, bool exact) {
  std::vector<RateRow> rows;
  for (int m : m_list) {
    const CodeParams p(m, ell);
    rows.push_back(rate_row(p, find_R(default_error_set(p, exact), p, SearchMode::Relaxed)));
  }
  return rows;
}

}  // namespace ecdloco
