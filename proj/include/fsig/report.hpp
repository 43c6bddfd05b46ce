#pragma once

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "fsig/criteria.hpp"
#include "fsig/invariants.hpp"
#include "fsig/rational.hpp"
#include "fsig/ring.hpp"
#include "fsig/version.hpp"

namespace fsig {

using ordered_json = nlohmann::ordered_json;

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string digest_string(std::string_view s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a:%016llx",
                static_cast<unsigned long long>(fnv1a64(s)));
  return buf;
}

// Everything a renderer needs besides the command-specific payload.
struct ReportContext {
  std::string command;
  std::string format;  // table | json | csv
  std::string name;
  std::string digest;
  const RingPresentation* ring = nullptr;
  int emax = 2;
  long long tmax = 8;
  int window = 2;
  Rational epsilon{1, 1000};
  std::string order = "grevlex";
  long long term_budget = 2'000'000;
  std::optional<int> e;
  std::optional<long long> t;
};

namespace detail {

inline std::string bool_word(bool b) { return b ? "true" : "false"; }
inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string params_line(const ReportContext& ctx) {
  std::string s = "emax=" + std::to_string(ctx.emax) +
                  " tmax=" + std::to_string(ctx.tmax) +
                  " window=" + std::to_string(ctx.window) +
                  " epsilon=" + ctx.epsilon.to_string() + " order=" + ctx.order +
                  " term-budget=" + std::to_string(ctx.term_budget);
  if (ctx.e) s += " e=" + std::to_string(*ctx.e);
  if (ctx.t) s += " t=" + std::to_string(*ctx.t);
  return s;
}

inline std::string variables_line(const RingPresentation& R) {
  std::string s;
  for (std::size_t i = 0; i < R.ambient()->nvars(); ++i) {
    if (i) s += ",";
    s += R.ambient()->var_names()[i];
  }
  return s;
}

inline std::string table_head(const ReportContext& ctx) {
  const RingPresentation& R = *ctx.ring;
  std::string s;
  s += std::string(kToolName) + " " + kVersion + " " + ctx.command + "\n";
  s += "ring " + ctx.name + ": p=" + std::to_string(R.p()) + " vars=" +
       variables_line(R) + " d=" + std::to_string(R.dim()) +
       " alpha=" + std::to_string(R.alpha()) +
       " reduced=" + bool_word(R.reduced()) + "\n";
  s += "input: " + ctx.digest + "\n";
  s += "params: " + params_line(ctx) + "\n";
  return s;
}

inline std::string csv_head(const ReportContext& ctx) {
  std::string s;
  s += "# " + std::string(kToolName) + " " + kVersion + " " + ctx.command + "\n";
  s += "# input: " + ctx.name + " " + ctx.digest + "\n";
  s += "# params: " + params_line(ctx) + "\n";
  return s;
}

inline ordered_json json_envelope(const ReportContext& ctx) {
  const RingPresentation& R = *ctx.ring;
  ordered_json doc;
  doc["schema"] = kReportSchema;
  doc["tool"] = kToolName;
  doc["version"] = kVersion;
  doc["command"] = ctx.command;
  ordered_json input;
  input["name"] = ctx.name;
  input["digest"] = ctx.digest;
  input["p"] = R.p();
  ordered_json vars = ordered_json::array();
  for (const auto& v : R.ambient()->var_names()) vars.push_back(v);
  input["variables"] = vars;
  input["d"] = R.dim();
  input["alpha"] = R.alpha();
  input["reduced"] = R.reduced();
  doc["input"] = input;
  ordered_json params;
  params["emax"] = ctx.emax;
  params["tmax"] = ctx.tmax;
  params["window"] = ctx.window;
  params["epsilon"] = ctx.epsilon.to_string();
  params["order"] = ctx.order;
  params["term_budget"] = ctx.term_budget;
  if (ctx.e) params["e"] = *ctx.e;
  if (ctx.t) params["t"] = *ctx.t;
  doc["params"] = params;
  return doc;
}

inline std::string dump_json(ordered_json doc) { return doc.dump(2) + "\n"; }

// Right-aligned plain-text table with a two-space gutter.
inline std::string format_aligned(const std::vector<std::string>& header,
                                  const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t j = 0; j < header.size(); ++j) width[j] = header[j].size();
  for (const auto& row : rows)
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j].size() > width[j]) width[j] = row[j].size();
  auto emit = [&](const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t j = 0; j < cells.size(); ++j) {
      line += "  ";
      line += std::string(width[j] - cells[j].size(), ' ');
      line += cells[j];
    }
    return line + "\n";
  };
  std::string s = emit(header);
  for (const auto& row : rows) s += emit(row);
  return s;
}

inline ordered_json trace_json(const SplittingNumber& sn) {
  ordered_json arr = ordered_json::array();
  for (const auto& te : sn.trace) {
    ordered_json item;
    item["t"] = te.t;
    item["L"] = te.length;
    arr.push_back(item);
  }
  return arr;
}

inline ordered_json oracle_json(const SplittingNumber& sn) {
  if (!sn.oracle_a_q) return nullptr;
  ordered_json o;
  o["a_q"] = *sn.oracle_a_q;
  o["agrees"] = sn.oracle_agrees;
  return o;
}

inline std::string trace_text(const SplittingNumber& sn) {
  std::string s;
  for (const auto& te : sn.trace) {
    if (!s.empty()) s += "  ";
    s += "t=" + std::to_string(te.t) + " L=" + std::to_string(te.length);
  }
  return s;
}

}  // namespace detail

inline std::string render_aq(const ReportContext& ctx,
                             const std::vector<SplittingNumber>& sns) {
  if (ctx.format == "json") {
    ordered_json doc = detail::json_envelope(ctx);
    ordered_json rows = ordered_json::array();
    for (const auto& sn : sns) {
      ordered_json r;
      r["e"] = sn.e;
      r["q"] = sn.q;
      r["a_q"] = sn.a_q;
      r["t_used"] = sn.t_used;
      r["stabilized"] = sn.stabilized;
      r["trace"] = detail::trace_json(sn);
      r["oracle"] = detail::oracle_json(sn);
      rows.push_back(r);
    }
    ordered_json result;
    result["rows"] = rows;
    doc["result"] = result;
    return detail::dump_json(std::move(doc));
  }
  if (ctx.format == "csv") {
    std::string s = detail::csv_head(ctx);
    s += "e,q,a_q,t_used,stabilized,oracle_a_q,oracle_agrees\n";
    for (const auto& sn : sns) {
      s += std::to_string(sn.e) + "," + std::to_string(sn.q) + "," +
           std::to_string(sn.a_q) + "," + std::to_string(sn.t_used) + "," +
           detail::bool_word(sn.stabilized) + ",";
      if (sn.oracle_a_q)
        s += std::to_string(*sn.oracle_a_q) + "," +
             detail::bool_word(sn.oracle_agrees);
      else
        s += ",";
      s += "\n";
    }
    return s;
  }
  std::string s = detail::table_head(ctx);
  for (const auto& sn : sns) {
    s += "e = " + std::to_string(sn.e) + ", q = " + std::to_string(sn.q) + "\n";
    s += "trace: " + detail::trace_text(sn) + "\n";
    s += "stabilized: " + detail::yes_no(sn.stabilized) +
         " (t_used = " + std::to_string(sn.t_used) + ")\n";
    s += "a_q = " + std::to_string(sn.a_q) + "\n";
    if (sn.oracle_a_q)
      s += "oracle a_q = " + std::to_string(*sn.oracle_a_q) +
           (sn.oracle_agrees ? " (agrees)" : " (DISAGREES)") + "\n";
  }
  return s;
}

inline std::string render_fsig(const ReportContext& ctx,
                               const FSignatureReport& rep) {
  if (ctx.format == "json") {
    ordered_json doc = detail::json_envelope(ctx);
    ordered_json rows = ordered_json::array();
    for (const auto& row : rep.rows) {
      ordered_json r;
      r["e"] = row.sn.e;
      r["q"] = row.sn.q;
      r["a_q"] = row.sn.a_q;
      r["s_num"] = row.sn.a_q;
      r["s_den"] = row.q_pow;
      r["s"] = row.s_e.to_string();
      r["s_approx"] = row.s_e.approx_string();
      r["t_used"] = row.sn.t_used;
      r["stabilized"] = row.sn.stabilized;
      r["trace"] = detail::trace_json(row.sn);
      r["oracle"] = detail::oracle_json(row.sn);
      rows.push_back(r);
    }
    ordered_json hk = ordered_json::array();
    for (const auto& row : rep.hk) {
      ordered_json r;
      r["e"] = row.e;
      r["q"] = row.q;
      r["length"] = row.len;
      r["ratio_num"] = row.len;
      r["ratio_den"] = row.q_pow;
      r["ratio"] = row.ratio.to_string();
      r["ratio_approx"] = row.ratio.approx_string();
      hk.push_back(r);
    }
    ordered_json result;
    result["rows"] = rows;
    result["hilbert_kunz"] = hk;
    result["s_positive_evidence"] = rep.s_positive_evidence;
    result["sdim"] = rep.sdim ? ordered_json(*rep.sdim) : ordered_json(nullptr);
    result["sdim_note"] = rep.sdim_note;
    doc["result"] = result;
    return detail::dump_json(std::move(doc));
  }
  if (ctx.format == "csv") {
    std::string s = detail::csv_head(ctx);
    s += "e,q,a_q,s_e_num,s_e_den,s_e_approx\n";
    for (const auto& row : rep.rows)
      s += std::to_string(row.sn.e) + "," + std::to_string(row.sn.q) + "," +
           std::to_string(row.sn.a_q) + "," + std::to_string(row.sn.a_q) + "," +
           std::to_string(row.q_pow) + "," + row.s_e.approx_string() + "\n";
    return s;
  }
  std::string s = detail::table_head(ctx);
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : rep.rows) {
    std::string oracle = row.sn.oracle_a_q
                             ? std::to_string(*row.sn.oracle_a_q) +
                                   (row.sn.oracle_agrees ? " ok" : " MISMATCH")
                             : "-";
    rows.push_back({std::to_string(row.sn.e), std::to_string(row.sn.q),
                    std::to_string(row.sn.a_q), row.s_e.to_string(),
                    row.s_e.approx_string(), detail::yes_no(row.sn.stabilized),
                    oracle});
  }
  s += detail::format_aligned({"e", "q", "a_q", "s_e", "~s_e", "stable", "oracle"},
                              rows);
  s += "hilbert-kunz:\n";
  std::vector<std::vector<std::string>> hkr;
  for (const auto& row : rep.hk)
    hkr.push_back({std::to_string(row.e), std::to_string(row.q),
                   std::to_string(row.len), row.ratio.to_string(),
                   row.ratio.approx_string()});
  s += detail::format_aligned({"e", "q", "length", "ratio", "~ratio"}, hkr);
  s += "s-positive evidence: " + detail::yes_no(rep.s_positive_evidence) + "\n";
  if (rep.sdim)
    s += "sdim estimate: " + std::to_string(*rep.sdim) + " (" + rep.sdim_note +
         ")\n";
  else
    s += "sdim estimate: none (" + rep.sdim_note + ")\n";
  return s;
}

inline std::string render_hk(const ReportContext& ctx,
                             const std::vector<HilbertKunzRow>& rows) {
  if (ctx.format == "json") {
    ordered_json doc = detail::json_envelope(ctx);
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json r;
      r["e"] = row.e;
      r["q"] = row.q;
      r["length"] = row.len;
      r["ratio_num"] = row.len;
      r["ratio_den"] = row.q_pow;
      r["ratio"] = row.ratio.to_string();
      r["ratio_approx"] = row.ratio.approx_string();
      arr.push_back(r);
    }
    doc["result"] = ordered_json{{"rows", arr}};
    return detail::dump_json(std::move(doc));
  }
  if (ctx.format == "csv") {
    std::string s = detail::csv_head(ctx);
    s += "e,q,length,ratio_num,ratio_den,ratio_approx\n";
    for (const auto& row : rows)
      s += std::to_string(row.e) + "," + std::to_string(row.q) + "," +
           std::to_string(row.len) + "," + std::to_string(row.len) + "," +
           std::to_string(row.q_pow) + "," + row.ratio.approx_string() + "\n";
    return s;
  }
  std::string s = detail::table_head(ctx);
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : rows)
    cells.push_back({std::to_string(row.e), std::to_string(row.q),
                     std::to_string(row.len), row.ratio.to_string(),
                     row.ratio.approx_string()});
  s += detail::format_aligned({"e", "q", "length", "ratio", "~ratio"}, cells);
  return s;
}

inline std::string render_sdim(const ReportContext& ctx,
                               const FSignatureReport& rep) {
  if (ctx.format == "json") {
    ordered_json doc = detail::json_envelope(ctx);
    ordered_json rows = ordered_json::array();
    for (const auto& row : rep.rows) {
      ordered_json r;
      r["e"] = row.sn.e;
      r["q"] = row.sn.q;
      r["a_q"] = row.sn.a_q;
      r["s"] = row.s_e.to_string();
      r["s_approx"] = row.s_e.approx_string();
      rows.push_back(r);
    }
    ordered_json result;
    result["rows"] = rows;
    result["sdim"] = rep.sdim ? ordered_json(*rep.sdim) : ordered_json(nullptr);
    result["dim"] = rep.d;
    result["note"] = rep.sdim_note;
    result["s_positive_evidence"] = rep.s_positive_evidence;
    doc["result"] = result;
    return detail::dump_json(std::move(doc));
  }
  if (ctx.format == "csv") {
    std::string s = detail::csv_head(ctx);
    s += "sdim,dim,s_positive_evidence\n";
    s += (rep.sdim ? std::to_string(*rep.sdim) : std::string()) + "," +
         std::to_string(rep.d) + "," +
         detail::bool_word(rep.s_positive_evidence) + "\n";
    return s;
  }
  std::string s = detail::table_head(ctx);
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : rep.rows)
    cells.push_back({std::to_string(row.sn.e), std::to_string(row.sn.q),
                     std::to_string(row.sn.a_q), row.s_e.to_string(),
                     row.s_e.approx_string()});
  s += detail::format_aligned({"e", "q", "a_q", "s_e", "~s_e"}, cells);
  s += "sdim estimate: " +
       (rep.sdim ? std::to_string(*rep.sdim) : std::string("none")) + " (" +
       rep.sdim_note + ")\n";
  s += "dim R: " + std::to_string(rep.d) + "\n";
  return s;
}

inline std::string render_fpure(const ReportContext& ctx, bool fpure,
                                const std::string& criterion) {
  if (ctx.format == "json") {
    ordered_json doc = detail::json_envelope(ctx);
    doc["result"] = ordered_json{{"fpure", fpure}, {"criterion", criterion}};
    return detail::dump_json(std::move(doc));
  }
  if (ctx.format == "csv") {
    std::string s = detail::csv_head(ctx);
    s += "fpure,criterion\n";
    s += detail::bool_word(fpure) + "," + criterion + "\n";
    return s;
  }
  std::string s = detail::table_head(ctx);
  s += "F-pure: " + detail::yes_no(fpure) + "\n";
  s += "criterion: " + criterion + "\n";
  return s;
}

inline std::string render_sfr(const ReportContext& ctx,
                              const std::optional<SfrWitness>& w, int searched) {
  if (ctx.format == "json") {
    ordered_json doc = detail::json_envelope(ctx);
    ordered_json result;
    if (w)
      result["witness"] = ordered_json{{"e", w->e}, {"q", w->q}};
    else
      result["witness"] = nullptr;
    result["searched_emax"] = searched;
    doc["result"] = result;
    return detail::dump_json(std::move(doc));
  }
  if (ctx.format == "csv") {
    std::string s = detail::csv_head(ctx);
    s += "witness_found,witness_e,witness_q,searched_emax\n";
    if (w)
      s += "true," + std::to_string(w->e) + "," + std::to_string(w->q) + "," +
           std::to_string(searched) + "\n";
    else
      s += "false,,," + std::to_string(searched) + "\n";
    return s;
  }
  std::string s = detail::table_head(ctx);
  if (w)
    s += "witness: q = " + std::to_string(w->q) + " (e = " + std::to_string(w->e) +
         ")\n";
  else
    s += "witness: none found through e <= " + std::to_string(searched) +
         " (Unknown)\n";
  return s;
}

inline std::string render_oracle_aq(const ReportContext& ctx, int e, long long q,
                                    long long a_q) {
  if (ctx.format == "json") {
    ordered_json doc = detail::json_envelope(ctx);
    doc["result"] = ordered_json{{"e", e}, {"q", q}, {"a_q", a_q}};
    return detail::dump_json(std::move(doc));
  }
  if (ctx.format == "csv") {
    std::string s = detail::csv_head(ctx);
    s += "e,q,a_q\n";
    s += std::to_string(e) + "," + std::to_string(q) + "," + std::to_string(a_q) +
         "\n";
    return s;
  }
  std::string s = detail::table_head(ctx);
  s += "e = " + std::to_string(e) + ", q = " + std::to_string(q) + "\n";
  s += "a_q = " + std::to_string(a_q) + "\n";
  return s;
}

inline std::string render_bigpowers(const ReportContext& ctx,
                                    const BigPowersCheck& bp) {
  if (ctx.format == "json") {
    ordered_json doc = detail::json_envelope(ctx);
    ordered_json r;
    r["e"] = bp.e;
    r["t"] = bp.t;
    r["q"] = bp.q;
    r["q0"] = bp.j0 ? ordered_json(bp.q0) : ordered_json(nullptr);
    r["j0"] = bp.j0 ? ordered_json(*bp.j0) : ordered_json(nullptr);
    r["implied_bound"] = bp.implied_bound;
    r["colon_length"] = bp.colon_length;
    r["a_q"] = bp.a_q;
    r["bound_holds"] = bp.bound_holds;
    doc["result"] = r;
    return detail::dump_json(std::move(doc));
  }
  if (ctx.format == "csv") {
    std::string s = detail::csv_head(ctx);
    s += "e,t,q,q0,implied_bound,colon_length,a_q,bound_holds\n";
    s += std::to_string(bp.e) + "," + std::to_string(bp.t) + "," +
         std::to_string(bp.q) + ",";
    s += bp.j0 ? std::to_string(bp.q0) : std::string();
    s += "," + std::to_string(bp.implied_bound) + "," +
         std::to_string(bp.colon_length) + "," + std::to_string(bp.a_q) + "," +
         detail::bool_word(bp.bound_holds) + "\n";
    return s;
  }
  std::string s = detail::table_head(ctx);
  s += "e = " + std::to_string(bp.e) + ", q = " + std::to_string(bp.q) +
       ", t = " + std::to_string(bp.t) + "\n";
  s += "colon length: " + std::to_string(bp.colon_length) + "\n";
  if (bp.j0) {
    s += "q0 = " + std::to_string(bp.q0) + " (j = " + std::to_string(*bp.j0) +
         "): the colon is contained in m^[q/q0]\n";
    s += "implied bound: length(R/m^[q/q0]) = " +
         std::to_string(bp.implied_bound) + "\n";
    s += "a_q = " + std::to_string(bp.a_q) + " vs bound: " +
         (bp.bound_holds ? "holds" : "VIOLATED") + "\n";
  } else {
    s += "q0: none found through j <= " + std::to_string(bp.e) + "\n";
    s += "a_q = " + std::to_string(bp.a_q) + "\n";
  }
  return s;
}

inline std::string render_classify(const ReportContext& ctx, const Evidence& ev) {
  if (ctx.format == "json") {
    ordered_json doc = detail::json_envelope(ctx);
    ordered_json r;
    r["fpure"] = ev.fpure;
    r["witness_searched"] = ev.witness_searched;
    if (ev.witness)
      r["witness"] = ordered_json{{"e", ev.witness->e}, {"q", ev.witness->q}};
    else
      r["witness"] = nullptr;
    if (ev.have_report) {
      ordered_json rows = ordered_json::array();
      for (const auto& row : ev.report.rows) {
        ordered_json rr;
        rr["e"] = row.sn.e;
        rr["q"] = row.sn.q;
        rr["a_q"] = row.sn.a_q;
        rr["s"] = row.s_e.to_string();
        rr["s_approx"] = row.s_e.approx_string();
        rows.push_back(rr);
      }
      r["rows"] = rows;
      r["s_positive_evidence"] = ev.report.s_positive_evidence;
      r["sdim"] = ev.report.sdim ? ordered_json(*ev.report.sdim)
                                 : ordered_json(nullptr);
      r["dim"] = ev.report.d;
    } else {
      r["rows"] = ordered_json::array();
      r["s_positive_evidence"] = nullptr;
      r["sdim"] = nullptr;
      r["dim"] = ctx.ring->dim();
    }
    r["verdict"] = ev.verdict;
    doc["result"] = r;
    return detail::dump_json(std::move(doc));
  }
  if (ctx.format == "csv") {
    std::string s = detail::csv_head(ctx);
    s += "fpure,witness_q,s_positive_evidence,sdim,verdict\n";
    s += detail::bool_word(ev.fpure) + ",";
    s += ev.witness ? std::to_string(ev.witness->q) : std::string();
    s += ",";
    s += ev.have_report ? detail::bool_word(ev.report.s_positive_evidence)
                        : std::string();
    s += ",";
    s += (ev.have_report && ev.report.sdim) ? std::to_string(*ev.report.sdim)
                                            : std::string();
    s += "," + ev.verdict + "\n";
    return s;
  }
  std::string s = detail::table_head(ctx);
  s += "F-pure: " + detail::yes_no(ev.fpure) + "\n";
  if (ev.witness_searched) {
    if (ev.witness)
      s += "witness: q = " + std::to_string(ev.witness->q) + " (e = " +
           std::to_string(ev.witness->e) + ")\n";
    else
      s += "witness: none found (Unknown)\n";
  } else {
    s += "witness: not searched (no candidate c in the presentation)\n";
  }
  if (ev.have_report) {
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : ev.report.rows)
      cells.push_back({std::to_string(row.sn.e), std::to_string(row.sn.q),
                       std::to_string(row.sn.a_q), row.s_e.to_string(),
                       row.s_e.approx_string()});
    s += detail::format_aligned({"e", "q", "a_q", "s_e", "~s_e"}, cells);
    s += "s-positive evidence: " + detail::yes_no(ev.report.s_positive_evidence) +
         "\n";
    if (ev.report.sdim)
      s += "sdim estimate: " + std::to_string(*ev.report.sdim) +
           " (dim R = " + std::to_string(ev.report.d) + ")\n";
  } else {
    s += "splitting rows: not computed (no sop in the presentation)\n";
  }
  s += "verdict: " + ev.verdict + "\n";
  return s;
}

}  // namespace fsig
