// youngtab: command-line front end over the C API.
//
// Results go to stdout, diagnostics to stderr. Exit status is 0 only when the
// computation succeeded and every requested verification agreed.

#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "youngtab/youngtab.h"

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultEnumerationBoxes = 20;
constexpr std::uint64_t kDefaultCountBoxes = 100;

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};

using PartitionPtr =
    std::unique_ptr<yt_partition, Deleter<yt_partition, yt_partition_free>>;
using FillingPtr =
    std::unique_ptr<yt_filling, Deleter<yt_filling, yt_filling_free>>;
using FillingIterPtr =
    std::unique_ptr<yt_filling_iter,
                    Deleter<yt_filling_iter, yt_filling_iter_free>>;
using PolyPtr = std::unique_ptr<yt_poly, Deleter<yt_poly, yt_poly_free>>;
using ExpansionPtr =
    std::unique_ptr<yt_expansion, Deleter<yt_expansion, yt_expansion_free>>;
using PermutationPtr =
    std::unique_ptr<yt_permutation,
                    Deleter<yt_permutation, yt_permutation_free>>;
using TracePtr =
    std::unique_ptr<yt_rsk_trace, Deleter<yt_rsk_trace, yt_rsk_trace_free>>;

void check(yt_status status) {
  if (status != YT_OK) {
    throw CliError(std::string(yt_status_name(status)) + ": " +
                   yt_last_error_message());
  }
}

std::string take(char* s) {
  std::string out(s);
  yt_string_free(s);
  return out;
}

PartitionPtr parse_partition(const std::string& text) {
  yt_partition* p = nullptr;
  check(yt_partition_parse(text.c_str(), &p));
  return PartitionPtr(p);
}

std::string to_string(const yt_partition* p) {
  char* s = nullptr;
  check(yt_partition_to_string(p, &s));
  return take(s);
}

std::string render(const yt_filling* t) {
  char* s = nullptr;
  check(yt_filling_render(t, &s));
  std::string out = take(s);
  return out.empty() ? "(empty)" : out;
}

json filling_json(const yt_filling* t) {
  json rows = json::array();
  for (size_t r = 0; r < yt_filling_num_rows(t); ++r) {
    json row = json::array();
    for (size_t i = 0; i < yt_filling_row_length(t, r); ++i) {
      row.push_back(yt_filling_entry(t, r, i));
    }
    rows.push_back(std::move(row));
  }
  yt_partition* outer = nullptr;
  yt_partition* inner = nullptr;
  check(yt_filling_outer(t, &outer));
  PartitionPtr outer_owner(outer);
  check(yt_filling_inner(t, &inner));
  PartitionPtr inner_owner(inner);
  return {{"outer", to_string(outer)},
          {"inner", to_string(inner)},
          {"rows", std::move(rows)}};
}

std::vector<FillingPtr> drain(yt_filling_iter* raw) {
  FillingIterPtr it(raw);
  std::vector<FillingPtr> out;
  while (true) {
    yt_filling* t = nullptr;
    yt_status s = yt_filling_iter_next(it.get(), &t);
    if (s == YT_DONE) break;
    check(s);
    out.emplace_back(t);
  }
  return out;
}

void guard(std::uint64_t boxes, std::uint64_t limit, const std::string& what) {
  if (boxes > limit) {
    throw CliError(what + " has " + std::to_string(boxes) +
                   " boxes; the limit is " + std::to_string(limit) +
                   " (raise it with --max-boxes)");
  }
}

struct Output {
  bool as_json = false;
  json doc;
  std::string text;

  void emit() const {
    if (as_json) {
      std::cout << doc.dump(2) << '\n';
    } else {
      std::cout << text;
    }
  }
};

std::string list_text(const std::vector<FillingPtr>& ts) {
  std::string out;
  for (size_t i = 0; i < ts.size(); ++i) {
    if (i) out += '\n';
    out += render(ts[i].get()) + '\n';
  }
  return out;
}

json list_json(const std::vector<FillingPtr>& ts) {
  json arr = json::array();
  for (const auto& t : ts) arr.push_back(filling_json(t.get()));
  return arr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Young tableaux combinatorics: counting, Schur polynomials, "
               "Littlewood-Richardson coefficients and RSK"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  std::optional<std::uint64_t> max_boxes;
  app.add_flag("--json", as_json, "Emit a JSON object instead of text");
  app.add_option("--max-boxes", max_boxes,
                 "Size limit (default 20 for enumerations, 100 for count-syt)");

  std::string shape_arg;
  std::string mu_arg;
  std::string nu_arg;
  std::string inner_arg;
  std::uint32_t bound = 0;

  auto* count_syt = app.add_subcommand(
      "count-syt", "Number of standard tableaux (hook-length formula)");
  count_syt->add_option("shape", shape_arg, "Partition, e.g. [4,2,1]")
      ->required();

  auto* list_syt = app.add_subcommand("list-syt", "List standard tableaux");
  list_syt->add_option("shape", shape_arg, "Partition")->required();

  auto* list_ssyt = app.add_subcommand(
      "list-ssyt", "List semistandard tableaux with entries at most N");
  list_ssyt->add_option("shape", shape_arg, "Outer partition")->required();
  list_ssyt->add_option("N", bound, "Largest entry")->required();
  list_ssyt->add_option("--inner", inner_arg, "Inner partition of a skew shape");

  bool schur_list = false;
  auto* schur = app.add_subcommand("schur", "Schur polynomial s_shape(x1..xN)");
  schur->add_option("shape", shape_arg, "Partition")->required();
  schur->add_option("N", bound, "Number of variables")->required();
  schur->add_flag("--list", schur_list,
                  "List the contributing tableaux instead");

  bool lr_witnesses = false;
  bool lr_verify = false;
  auto* lr = app.add_subcommand(
      "lr", "Littlewood-Richardson coefficient C^nu_{lambda,mu}");
  lr->add_option("lambda", shape_arg, "Partition")->required();
  lr->add_option("mu", mu_arg, "Partition")->required();
  lr->add_option("nu", nu_arg, "Partition")->required();
  lr->add_flag("--witnesses", lr_witnesses, "Print every LR filling");
  lr->add_flag("--verify", lr_verify,
               "Cross-check against the Schur expansion of s_lambda*s_mu");

  auto* expand = app.add_subcommand(
      "expand", "Expand s_lambda*s_mu in the Schur basis");
  expand->add_option("lambda", shape_arg, "Partition")->required();
  expand->add_option("mu", mu_arg, "Partition")->required();

  std::vector<std::string> rsk_args;
  bool rsk_trace = false;
  bool rsk_invert = false;
  auto* rsk = app.add_subcommand(
      "rsk", "Schensted correspondence of a permutation");
  rsk->add_option("args", rsk_args,
                  "Permutation in one-line notation, or with --invert the "
                  "insertion and recording tableaux")
      ->required();
  rsk->add_flag("--trace", rsk_trace, "Print every intermediate pair");
  rsk->add_flag("--invert", rsk_invert,
                "Recover the permutation from a tableau pair");

  std::string bk_filling;
  std::uint32_t bk_index = 0;
  auto* bk = app.add_subcommand("bk", "Apply the Bender-Knuth involution t_i");
  bk->add_option("filling", bk_filling,
                 "Semistandard filling, rows separated by '/'")
      ->required();
  bk->add_option("i", bk_index, "Index i >= 1")->required();

  CLI11_PARSE(app, argc, argv);

  const std::uint64_t enum_limit = max_boxes.value_or(kDefaultEnumerationBoxes);
  Output out;
  out.as_json = as_json;
  int exit_code = 0;

  try {
    if (*count_syt) {
      auto p = parse_partition(shape_arg);
      guard(yt_partition_size(p.get()), max_boxes.value_or(kDefaultCountBoxes),
            to_string(p.get()));
      char* s = nullptr;
      check(yt_count_standard(p.get(), &s));
      std::string count = take(s);
      out.text = count + '\n';
      out.doc = {{"command", "count-syt"},
                 {"inputs", {{"shape", to_string(p.get())}}},
                 {"result", count}};
    } else if (*list_syt) {
      auto p = parse_partition(shape_arg);
      guard(yt_partition_size(p.get()), enum_limit, to_string(p.get()));
      yt_filling_iter* it = nullptr;
      check(yt_enumerate_syt(p.get(), &it));
      auto ts = drain(it);
      out.text = list_text(ts);
      out.doc = {{"command", "list-syt"},
                 {"inputs", {{"shape", to_string(p.get())}}},
                 {"count", ts.size()},
                 {"result", list_json(ts)}};
    } else if (*list_ssyt) {
      auto outer = parse_partition(shape_arg);
      PartitionPtr inner =
          inner_arg.empty() ? nullptr : parse_partition(inner_arg);
      std::uint64_t boxes = yt_partition_size(outer.get()) -
                            (inner ? std::min(yt_partition_size(inner.get()),
                                              yt_partition_size(outer.get()))
                                   : 0);
      guard(boxes, enum_limit, "shape");
      yt_filling_iter* it = nullptr;
      check(yt_enumerate_ssyt(outer.get(), inner.get(), bound, &it));
      auto ts = drain(it);
      out.text = list_text(ts);
      json inputs = {{"shape", to_string(outer.get())}, {"N", bound}};
      if (inner) inputs["inner"] = to_string(inner.get());
      out.doc = {{"command", "list-ssyt"},
                 {"inputs", inputs},
                 {"count", ts.size()},
                 {"result", list_json(ts)}};
    } else if (*schur) {
      auto p = parse_partition(shape_arg);
      guard(yt_partition_size(p.get()), enum_limit, to_string(p.get()));
      json inputs = {{"shape", to_string(p.get())}, {"N", bound}};
      if (schur_list) {
        yt_filling_iter* it = nullptr;
        check(yt_enumerate_ssyt(p.get(), nullptr, bound, &it));
        auto ts = drain(it);
        out.text = list_text(ts);
        out.doc = {{"command", "schur"},
                   {"inputs", inputs},
                   {"count", ts.size()},
                   {"result", list_json(ts)}};
      } else {
        yt_poly* raw = nullptr;
        check(yt_schur_polynomial(p.get(), bound, &raw));
        PolyPtr poly(raw);
        char* s = nullptr;
        check(yt_poly_render(poly.get(), &s));
        std::string text = take(s);
        json terms = json::array();
        std::vector<std::uint32_t> exps(yt_poly_width(poly.get()));
        for (size_t i = 0; i < yt_poly_num_terms(poly.get()); ++i) {
          char* c = nullptr;
          check(yt_poly_term(poly.get(), i, exps.data(), &c));
          terms.push_back({{"exponents", exps}, {"coefficient", take(c)}});
        }
        out.text = text + '\n';
        out.doc = {{"command", "schur"},
                   {"inputs", inputs},
                   {"result", {{"text", text}, {"terms", terms}}}};
      }
    } else if (*lr) {
      auto lambda = parse_partition(shape_arg);
      auto mu = parse_partition(mu_arg);
      auto nu = parse_partition(nu_arg);
      guard(yt_partition_size(nu.get()), enum_limit, to_string(nu.get()));
      char* s = nullptr;
      check(yt_lr_coefficient(lambda.get(), mu.get(), nu.get(), &s));
      std::string coeff = take(s);
      out.doc = {{"command", "lr"},
                 {"inputs",
                  {{"lambda", to_string(lambda.get())},
                   {"mu", to_string(mu.get())},
                   {"nu", to_string(nu.get())}}},
                 {"result", coeff}};
      out.text = coeff;
      if (lr_verify) {
        guard(yt_partition_size(lambda.get()) + yt_partition_size(mu.get()),
              enum_limit, "lambda+mu");
        yt_expansion* raw = nullptr;
        check(yt_expand_product(lambda.get(), mu.get(), &raw));
        ExpansionPtr e(raw);
        char* c = nullptr;
        check(yt_expansion_coefficient(e.get(), nu.get(), &c));
        std::string oracle = take(c);
        // The expansion only sees degree |lambda|+|mu|; other sizes are 0.
        if (yt_partition_size(nu.get()) !=
            yt_partition_size(lambda.get()) + yt_partition_size(mu.get())) {
          oracle = "0";
        }
        const bool agree = oracle == coeff;
        out.doc["verified"] = agree;
        out.doc["oracle"] = oracle;
        if (agree) {
          out.text += " (verified)";
        } else {
          out.text += " (MISMATCH: Schur expansion gives " + oracle + ")";
          std::cerr << "error: LR rule gives " << coeff
                    << " but the Schur expansion gives " << oracle << '\n';
          exit_code = 1;
        }
      }
      out.text += '\n';
      if (lr_witnesses) {
        yt_filling_iter* it = nullptr;
        check(yt_enumerate_lr(nu.get(), lambda.get(), mu.get(), &it));
        auto ts = drain(it);
        if (!ts.empty()) out.text += '\n' + list_text(ts);
        out.doc["witnesses"] = list_json(ts);
      }
    } else if (*expand) {
      auto lambda = parse_partition(shape_arg);
      auto mu = parse_partition(mu_arg);
      guard(yt_partition_size(lambda.get()) + yt_partition_size(mu.get()),
            enum_limit, "lambda+mu");
      yt_expansion* raw = nullptr;
      check(yt_expand_product(lambda.get(), mu.get(), &raw));
      ExpansionPtr e(raw);
      json terms = json::array();
      for (size_t i = 0; i < yt_expansion_size(e.get()); ++i) {
        yt_partition* nu = nullptr;
        char* c = nullptr;
        check(yt_expansion_entry(e.get(), i, &nu, &c));
        PartitionPtr nu_owner(nu);
        std::string coeff = take(c);
        std::string shape = to_string(nu);
        out.text += shape + ": " + coeff + '\n';
        terms.push_back({{"shape", shape}, {"coefficient", coeff}});
      }
      out.doc = {{"command", "expand"},
                 {"inputs",
                  {{"lambda", to_string(lambda.get())},
                   {"mu", to_string(mu.get())}}},
                 {"result", terms}};
    } else if (*rsk) {
      if (rsk_invert) {
        if (rsk_args.size() != 2) {
          throw CliError("rsk --invert takes the insertion and recording "
                         "tableaux, e.g. '1,3,5/2,4' '1,3,4/2,5'");
        }
        yt_filling* p = nullptr;
        yt_filling* q = nullptr;
        check(yt_filling_parse(rsk_args[0].c_str(), &p));
        FillingPtr p_owner(p);
        check(yt_filling_parse(rsk_args[1].c_str(), &q));
        FillingPtr q_owner(q);
        yt_permutation* raw = nullptr;
        check(yt_inverse_rsk(p, q, &raw));
        PermutationPtr sigma(raw);
        char* s = nullptr;
        check(yt_permutation_to_string(sigma.get(), &s));
        std::string text = take(s);
        out.text = text + '\n';
        out.doc = {{"command", "rsk"},
                   {"inputs",
                    {{"insertion", filling_json(p)},
                     {"recording", filling_json(q)}}},
                   {"result", text}};
      } else {
        if (rsk_args.size() != 1) {
          throw CliError("rsk takes one permutation, e.g. 21453");
        }
        yt_permutation* raw = nullptr;
        check(yt_permutation_parse(rsk_args[0].c_str(), &raw));
        PermutationPtr sigma(raw);
        char* s = nullptr;
        check(yt_permutation_to_string(sigma.get(), &s));
        std::string canonical = take(s);
        yt_rsk_trace* traw = nullptr;
        check(yt_rsk_trace_new(sigma.get(), &traw));
        TracePtr trace(traw);
        const size_t steps = yt_rsk_trace_length(trace.get());
        json snapshots = json::array();
        for (size_t i = rsk_trace ? 0 : steps - 1; i < steps; ++i) {
          yt_filling* p = nullptr;
          yt_filling* q = nullptr;
          check(yt_rsk_trace_step(trace.get(), i, &p, &q));
          FillingPtr p_owner(p);
          FillingPtr q_owner(q);
          if (rsk_trace) {
            if (i) out.text += '\n';
            out.text += "step " + std::to_string(i) + '\n';
          }
          out.text += "insertion:\n" + render(p) + "\nrecording:\n" +
                      render(q) + '\n';
          snapshots.push_back(
              {{"insertion", filling_json(p)}, {"recording", filling_json(q)}});
        }
        out.doc = {{"command", "rsk"},
                   {"inputs", {{"permutation", canonical}}},
                   {"result", snapshots.back()}};
        if (rsk_trace) out.doc["trace"] = snapshots;
      }
    } else if (*bk) {
      yt_filling* raw = nullptr;
      check(yt_filling_parse(bk_filling.c_str(), &raw));
      FillingPtr t(raw);
      guard(yt_filling_num_boxes(t.get()), enum_limit, "filling");
      yt_filling* res = nullptr;
      check(yt_bender_knuth(t.get(), bk_index, &res));
      FillingPtr result(res);
      out.text = render(result.get()) + '\n';
      out.doc = {{"command", "bk"},
                 {"inputs", {{"filling", filling_json(t.get())}, {"i", bk_index}}},
                 {"result", filling_json(result.get())}};
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  out.emit();
  return exit_code;
}
