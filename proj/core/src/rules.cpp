#include "blocksieve/rules.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

namespace blocksieve {

namespace {

constexpr std::array<Rule, 13> kRules{{
    {RuleId::R0, "level-0 structure",
     "level 0 is the coradical: B(0,d,d) is the sum of the d^2-dimensional "
     "simple subcoalgebras and B(0,1,1) = kG(H)",
     Applicability::Always},
    {RuleId::R1, "group divisibility",
     "Nichols-Zoeller freeness over kG(H): |G(H)| divides every block",
     Applicability::Always},
    {RuleId::R2, "edge divisibility",
     "G(H) permutes the d-dimensional bicomodules of B(n,d,1) and B(n,1,d)",
     Applicability::Always},
    {RuleId::R3, "antipode symmetry",
     "the antipode maps B(n,d1,d2) onto B(n,d2,d1)", Applicability::Always},
    {RuleId::R4, "chain condition",
     "a nonzero B(n,d1,d2) factors through B(i,d1,b) and B(n-i,b,d2)",
     Applicability::Always},
    {RuleId::R5, "off-diagonal escalation",
     "B(n,d1,d2) != 0 with d1 != d2 forces some B(n2,d1,d3) != 0, n2 > n",
     Applicability::Always},
    {RuleId::R6, "top pointed block",
     "the highest nonzero B(m,1,1) is spanned by G(H)-translates of one "
     "integral-dual element",
     Applicability::Always},
    {RuleId::R7, "necessary blocks",
     "without nontrivial skew-primitives B(1,1,1) = 0 and B(1,d,1), "
     "B(1,1,d), B(k,d,d), B(m,1,1) are nonzero for some d > 1, k, m > 1",
     Applicability::NoSkewPrimitives},
    {RuleId::R8, "pointed forcing",
     "a lower pointed block B(l,1,1), l < m, forces B(l',d1,1), B(l',1,d2), "
     "B(l'-1,d1,d3), B(l'-1,d4,d2) with l' > l > 1 and all d > 1",
     Applicability::NoSkewPrimitives},
    {RuleId::R9, "level contiguity",
     "the coradical filtration grows strictly, so no level is empty",
     Applicability::Always},
    {RuleId::R11, "support at level zero",
     "block labels index simple subcoalgebras of the coradical",
     Applicability::Always},
    {RuleId::R12, "bicomodule divisibility",
     "simple bicomodules V*_tau (x) V_mu have dimension d1*d2",
     Applicability::Always},
    {RuleId::RNC, "non-cosemisimplicity",
     "a non-cosemisimple coalgebra has a block above level 0",
     Applicability::NonCosemisimple},
}};

std::string dim_of(const BlockIndex& index, Dim dim) {
  return "dim " + to_string(index) + "=" + std::to_string(dim);
}

class Checker {
 public:
  Checker(const BlockSystem& s, const ModeFlags& flags)
      : s_(s), flags_(flags.normalized()), r_(s.group_order()) {
    for (const auto& [index, dim] : s_.blocks()) {
      if (index.level >= 1) {
        dims_.insert(index.d1);
        dims_.insert(index.d2);
      }
    }
    top_level_ = s_.max_level();
  }

  std::vector<RuleViolation> run() {
    level_zero();
    group_divisibility();
    edge_divisibility();
    antipode_symmetry();
    chain_condition();
    escalation();
    top_pointed();
    if (flags_.no_skew_primitives) {
      necessary_blocks();
      pointed_forcing();
    }
    contiguity();
    support_at_zero();
    bicomodule_divisibility();
    if (flags_.non_cosemisimple) non_cosemisimple();
    return std::move(out_);
  }

 private:
  bool present(int n, int d1, int d2) const { return s_.contains({n, d1, d2}); }

  void add(RuleId id, std::vector<BlockIndex> indices, std::string message,
           std::optional<std::string> witness = std::nullopt) {
    out_.push_back({id, std::move(indices), std::move(message), std::move(witness)});
  }

  void level_zero() {
    if (r_ < 1) {
      add(RuleId::R0, {{0, 1, 1}},
          "group order is " + std::to_string(r_) +
              " but dim B(0,1,1) = |G(H)| >= 1 for a Hopf algebra");
    }
    for (const auto& [index, dim] : s_.blocks()) {
      if (index.level != 0) continue;
      if (index.d1 != index.d2) {
        add(RuleId::R0, {index}, "level-0 block must be diagonal");
        continue;
      }
      const Dim square = Dim{index.d1} * index.d1;
      if (dim % square != 0) {
        add(RuleId::R0, {index},
            dim_of(index, dim) + " is not a multiple of d^2 = " +
                std::to_string(square));
      }
    }
    if (auto it = s_.blocks().find({0, 1, 1});
        it != s_.blocks().end() && it->second != r_) {
      add(RuleId::R0, {{0, 1, 1}},
          dim_of(it->first, it->second) + " but group order is " +
              std::to_string(r_));
    }
  }

  void group_divisibility() {
    if (r_ < 1) return;
    for (const auto& [index, dim] : s_.blocks()) {
      if (dim % r_ != 0) {
        add(RuleId::R1, {index},
            dim_of(index, dim) + " is not divisible by |G(H)| = " +
                std::to_string(r_));
      }
    }
  }

  void edge_divisibility() {
    for (const auto& [index, dim] : s_.blocks()) {
      if (index.level < 1 || (index.d1 != 1 && index.d2 != 1)) continue;
      const Dim d = std::max(index.d1, index.d2);
      const Dim need = d * r_;
      if (need > 0 && dim % need != 0) {
        add(RuleId::R2, {index},
            dim_of(index, dim) + " is not a multiple of d*|G(H)| = " +
                std::to_string(need));
      }
    }
  }

  void antipode_symmetry() {
    for (const auto& [index, dim] : s_.blocks()) {
      if (index.level < 1 || index.d1 == index.d2) continue;
      const BlockIndex mirror{index.level, index.d2, index.d1};
      const Dim other = s_.at(mirror);
      // Report each asymmetric pair once, from the side with the larger d1.
      if (other == dim) continue;
      if (other != 0 && index.d1 < index.d2) continue;
      add(RuleId::R3, {index, mirror},
          dim_of(index, dim) + " but " + dim_of(mirror, other));
    }
  }

  void chain_condition() {
    for (const auto& [index, dim] : s_.blocks()) {
      const int n = index.level;
      if (n < 2) continue;
      for (int i = 1; i < n; ++i) {
        bool found = false;
        for (int b : dims_) {
          if (present(i, index.d1, b) && present(n - i, b, index.d2)) {
            found = true;
            break;
          }
        }
        if (!found) {
          const std::string witness =
              "b with B(" + std::to_string(i) + "," + std::to_string(index.d1) +
              ",b) != 0 and B(" + std::to_string(n - i) + ",b," +
              std::to_string(index.d2) + ") != 0";
          add(RuleId::R4, {index},
              dim_of(index, dim) + " at split i=" + std::to_string(i) +
                  " has no witness " + witness,
              witness);
        }
      }
    }
  }

  void escalation() {
    for (const auto& [index, dim] : s_.blocks()) {
      if (index.level < 1 || index.d1 == index.d2) continue;
      bool found = false;
      for (const auto& [other, unused] : s_.blocks()) {
        if (other.level > index.level && other.d1 == index.d1) {
          found = true;
          break;
        }
      }
      if (!found) {
        const std::string witness = "B(n2," + std::to_string(index.d1) +
                                    ",d3) != 0 with n2 >= " +
                                    std::to_string(index.level + 1);
        add(RuleId::R5, {index},
            dim_of(index, dim) + " is off-diagonal but no " + witness, witness);
      }
    }
  }

  void top_pointed() {
    const auto levels = pointed_levels(s_);
    const BlockIndex top{levels.m, 1, 1};
    const Dim dim = s_.effective(top);
    if (dim != r_) {
      add(RuleId::R6, {top},
          "dim " + to_string(top) + "=" + std::to_string(dim) +
              " at the top pointed level m=" + std::to_string(levels.m) +
              ", expected = |G(H)| = " + std::to_string(r_));
    }
  }

  void necessary_blocks() {
    if (present(1, 1, 1)) {
      add(RuleId::R7, {{1, 1, 1}},
          "(1,1,1) must be absent without nontrivial skew-primitives, found " +
              dim_of({1, 1, 1}, s_.at({1, 1, 1})));
    }
    const auto levels = pointed_levels(s_);
    if (levels.m <= 1) {
      add(RuleId::R7, {},
          "no pointed block B(m,1,1) with m > 1",
          "B(m,1,1) != 0 with m > 1");
    }
    bool found = false;
    for (int d : dims_) {
      if (d <= 1 || !present(1, d, 1) || !present(1, 1, d)) continue;
      for (int k = 2; k <= top_level_ && !found; ++k) {
        found = present(k, d, d);
      }
      if (found) break;
    }
    if (!found) {
      add(RuleId::R7, {},
          "no d > 1 with B(1,d,1), B(1,1,d) and some B(k,d,d), k > 1, all nonzero",
          "d > 1 with B(1,d,1), B(1,1,d), B(k,d,d) != 0, k > 1");
    }
  }

  void pointed_forcing() {
    const auto levels = pointed_levels(s_);
    if (!levels.l || *levels.l >= levels.m) return;
    const int l = *levels.l;
    bool found = false;
    if (l > 1) {
      for (int lp = l + 1; lp <= top_level_ && !found; ++lp) {
        bool left = false;
        bool right = false;
        for (int d1 : dims_) {
          if (d1 <= 1 || !present(lp, d1, 1)) continue;
          for (int d3 : dims_) left = left || (d3 > 1 && present(lp - 1, d1, d3));
        }
        for (int d2 : dims_) {
          if (d2 <= 1 || !present(lp, 1, d2)) continue;
          for (int d4 : dims_) right = right || (d4 > 1 && present(lp - 1, d4, d2));
        }
        found = left && right;
      }
    }
    if (!found) {
      const std::string witness =
          "l' > " + std::to_string(l) +
          " and d1..d4 > 1 with B(l',d1,1), B(l',1,d2), B(l'-1,d1,d3), "
          "B(l'-1,d4,d2) != 0";
      add(RuleId::R8, {{l, 1, 1}, {levels.m, 1, 1}},
          "pointed levels l=" + std::to_string(l) + " < m=" +
              std::to_string(levels.m) + " but no " + witness +
              (l > 1 ? "" : " (requires l > 1)"),
          witness);
    }
  }

  void contiguity() {
    std::set<int> levels;
    for (const auto& [index, dim] : s_.blocks()) levels.insert(index.level);
    for (int n = 1; n <= top_level_; ++n) {
      if (!levels.contains(n)) {
        add(RuleId::R9, {},
            "level " + std::to_string(n) + " is empty below the top level " +
                std::to_string(top_level_));
      }
    }
  }

  void support_at_zero() {
    for (int d : dims_) {
      if (d == 1) continue;
      if (!present(0, d, d)) {
        std::vector<BlockIndex> users;
        for (const auto& [index, dim] : s_.blocks()) {
          if (index.level >= 1 && (index.d1 == d || index.d2 == d)) {
            users.push_back(index);
          }
        }
        users.insert(users.begin(), BlockIndex{0, d, d});
        add(RuleId::R11, std::move(users),
            "d=" + std::to_string(d) +
                " labels a block above level 0 but B(0," + std::to_string(d) +
                "," + std::to_string(d) + ") is zero");
      }
    }
  }

  void bicomodule_divisibility() {
    for (const auto& [index, dim] : s_.blocks()) {
      if (index.level < 1) continue;
      const Dim need = Dim{index.d1} * index.d2;
      if (dim % need != 0) {
        add(RuleId::R12, {index},
            dim_of(index, dim) + " is not a multiple of d1*d2 = " +
                std::to_string(need));
      }
    }
  }

  void non_cosemisimple() {
    if (top_level_ < 1) {
      add(RuleId::RNC, {}, "no block above level 0 (the system is cosemisimple)");
    }
  }

  const BlockSystem& s_;
  ModeFlags flags_;
  Dim r_;
  std::set<int> dims_;
  int top_level_ = 0;
  std::vector<RuleViolation> out_;
};

}  // namespace

std::span<const Rule> all_rules() { return kRules; }

const Rule& rule_info(RuleId id) {
  for (const auto& rule : kRules) {
    if (rule.id == id) return rule;
  }
  return kRules.front();
}

std::string_view to_string(RuleId id) {
  switch (id) {
    case RuleId::R0: return "R0";
    case RuleId::R1: return "R1";
    case RuleId::R2: return "R2";
    case RuleId::R3: return "R3";
    case RuleId::R4: return "R4";
    case RuleId::R5: return "R5";
    case RuleId::R6: return "R6";
    case RuleId::R7: return "R7";
    case RuleId::R8: return "R8";
    case RuleId::R9: return "R9";
    case RuleId::R11: return "R11";
    case RuleId::R12: return "R12";
    case RuleId::RNC: return "RNC";
  }
  return "?";
}

std::optional<RuleId> parse_rule_id(std::string_view text) {
  for (const auto& rule : kRules) {
    if (to_string(rule.id) == text) return rule.id;
  }
  return std::nullopt;
}

bool is_active(RuleId id, const ModeFlags& flags) {
  const auto f = flags.normalized();
  switch (rule_info(id).applicability) {
    case Applicability::Always: return true;
    case Applicability::NonCosemisimple: return f.non_cosemisimple;
    case Applicability::NoSkewPrimitives: return f.no_skew_primitives;
  }
  return false;
}

std::vector<RuleViolation> check(const BlockSystem& s, const ModeFlags& flags) {
  return Checker(s, flags).run();
}

std::string explain(const RuleViolation& v) {
  const auto& rule = rule_info(v.rule);
  std::string out;
  out += to_string(v.rule);
  out += ' ';
  out += rule.name;
  out += ": ";
  out += v.message;
  out += " [";
  if (!v.indices.empty()) {
    out += "at ";
    for (std::size_t i = 0; i < v.indices.size(); ++i) {
      if (i) out += ", ";
      out += to_string(v.indices[i]);
    }
    out += "; ";
  }
  out += rule.anchor;
  out += ']';
  return out;
}

nlohmann::ordered_json report_to_json(std::span<const RuleViolation> report) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& v : report) {
    nlohmann::ordered_json entry;
    entry["rule"] = to_string(v.rule);
    auto indices = nlohmann::ordered_json::array();
    for (const auto& index : v.indices) {
      indices.push_back({index.level, index.d1, index.d2});
    }
    entry["indices"] = std::move(indices);
    entry["message"] = v.message;
    if (v.missing_witness) entry["missing_witness"] = *v.missing_witness;
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace blocksieve
