#include "bicross/parse.hpp"

#include <fstream>
#include <sstream>

namespace bicross {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) {
    if (t[0] == '#') break;
    toks.push_back(t);
  }
  return toks;
}

GroupElement parse_elem(const Group& g, const std::string& tok, size_t line) {
  auto e = g.parse_element(tok);
  if (!e) throw ParseError(line, "'" + tok + "' is not an element of " + g.name());
  return *e;
}

}  // namespace

ParsedInput parse_input(const std::string& text) {
  ParsedInput out;
  std::istringstream is(text);
  std::string line;
  size_t lineno = 0;
  std::vector<std::vector<std::string>> pending;  // lookahead rows for tables
  std::vector<std::string> toks;

  auto next_line = [&](std::vector<std::string>& into) {
    while (std::getline(is, line)) {
      ++lineno;
      into = tokenize(line);
      if (!into.empty()) return true;
    }
    into.clear();
    return false;
  };

  // Deferred explicit matched pair under construction.
  struct ExplicitPair {
    GroupPtr H, K;
    std::map<std::pair<GroupElement, GroupElement>, GroupElement> tr, tl;
    size_t line;
  };
  std::optional<ExplicitPair> exp;

  auto finish_explicit = [&]() {
    if (!exp) return;
    out.pair = matched_pair_explicit(exp->H, exp->K, std::move(exp->tr), std::move(exp->tl));
    exp.reset();
  };

  while (next_line(toks)) {
    const std::string& kw = toks[0];
    if (kw == "tr" || kw == "tl") {
      if (!exp) throw ParseError(lineno, "tr/tl lines require 'matchedpair explicit' first");
      if (toks.size() != 5 || toks[3] != "->")
        throw ParseError(lineno, "expected: " + kw + " <h> <k> -> <value>");
      GroupElement h = parse_elem(*exp->H, toks[1], lineno);
      GroupElement k = parse_elem(*exp->K, toks[2], lineno);
      if (kw == "tr")
        exp->tr[{h, k}] = parse_elem(*exp->K, toks[4], lineno);
      else
        exp->tl[{h, k}] = parse_elem(*exp->H, toks[4], lineno);
      continue;
    }
    finish_explicit();

    if (kw == "group") {
      if (toks.size() < 3) throw ParseError(lineno, "expected: group <name> <kind> ...");
      const std::string& name = toks[1];
      const std::string& kind = toks[2];
      if (out.groups.count(name)) throw ParseError(lineno, "group '" + name + "' redefined");
      try {
        if (kind == "table") {
          if (toks.size() != 4) throw ParseError(lineno, "expected: group <name> table <n>");
          size_t n = std::stoul(toks[3]);
          std::vector<std::vector<uint32_t>> table;
          for (size_t r = 0; r < n; ++r) {
            std::vector<std::string> row;
            if (!next_line(row)) throw ParseError(lineno, "unexpected end of table");
            if (row.size() != n)
              throw ParseError(lineno, "table row needs " + std::to_string(n) + " entries");
            std::vector<uint32_t> vals;
            for (const auto& v : row) vals.push_back(std::stoul(v));
            table.push_back(std::move(vals));
          }
          out.groups[name] = make_table_group(name, std::move(table));
        } else if (kind == "perm") {
          if (toks.size() < 5)
            throw ParseError(lineno, "expected: group <name> perm <degree> <generators>...");
          size_t degree = std::stoul(toks[3]);
          std::vector<GroupElement::Perm> gens;
          for (size_t i = 4; i < toks.size(); ++i) {
            auto p = perm_from_cycles(toks[i], degree);
            if (!p) throw ParseError(lineno, "bad cycle notation '" + toks[i] + "'");
            gens.push_back(std::move(*p));
          }
          out.groups[name] = make_perm_group(name, degree, std::move(gens));
        } else if (kind == "family") {
          if (toks.size() < 4) throw ParseError(lineno, "expected: group <name> family <which>");
          const std::string& fam = toks[3];
          if (fam == "Z") {
            out.groups[name] = make_integer_group(name);
          } else if (fam == "Z1m") {
            if (toks.size() != 5) throw ParseError(lineno, "expected: family Z1m <m>");
            out.groups[name] = make_dyadic_group(std::stoul(toks[4]), name);
          } else if (fam == "ZmZ") {
            if (toks.size() != 5) throw ParseError(lineno, "expected: family ZmZ <m>");
            out.groups[name] = make_semidirect_group(std::stoul(toks[4]), name);
          } else {
            throw ParseError(lineno, "unknown family '" + fam + "'");
          }
        } else {
          throw ParseError(lineno, "unknown group kind '" + kind + "'");
        }
      } catch (const ParseError&) {
        throw;
      } catch (const std::exception& e) {
        throw ParseError(lineno, e.what());
      }
    } else if (kw == "subgroup") {
      if (toks.size() < 6 || toks[2] != "of")
        throw ParseError(lineno, "expected: subgroup <name> of <group> elements|generators ...");
      const std::string& name = toks[1];
      auto git = out.groups.find(toks[3]);
      if (git == out.groups.end()) throw ParseError(lineno, "unknown group '" + toks[3] + "'");
      std::vector<GroupElement> elems;
      for (size_t i = 5; i < toks.size(); ++i)
        elems.push_back(parse_elem(*git->second, toks[i], lineno));
      try {
        if (toks[4] == "elements")
          out.groups[name] = make_subgroup(name, git->second, std::move(elems));
        else if (toks[4] == "generators")
          out.groups[name] = make_subgroup_generated(name, git->second, std::move(elems));
        else
          throw ParseError(lineno, "expected 'elements' or 'generators'");
      } catch (const ParseError&) {
        throw;
      } catch (const std::exception& e) {
        throw ParseError(lineno, e.what());
      }
    } else if (kw == "matchedpair") {
      if (out.pair || exp) throw ParseError(lineno, "matched pair already defined");
      if (toks.size() >= 2 && toks[1] == "explicit") {
        if (toks.size() != 4) throw ParseError(lineno, "expected: matchedpair explicit <H> <K>");
        auto hit = out.groups.find(toks[2]);
        auto kit = out.groups.find(toks[3]);
        if (hit == out.groups.end() || kit == out.groups.end())
          throw ParseError(lineno, "unknown subgroup in matchedpair explicit");
        exp = ExplicitPair{hit->second, kit->second, {}, {}, lineno};
      } else if (toks.size() >= 2 && toks[1] == "builtin") {
        if (toks.size() < 4 || toks[2] != "ZmZ")
          throw ParseError(lineno, "expected: matchedpair builtin ZmZ <m> [swapped]");
        bool swapped = toks.size() == 5 && toks[4] == "swapped";
        if (toks.size() == 5 && !swapped)
          throw ParseError(lineno, "unknown option '" + toks[4] + "'");
        try {
          out.pair = builtin_matched_pair_zmz(std::stoul(toks[3]), swapped);
        } catch (const std::exception& e) {
          throw ParseError(lineno, e.what());
        }
      } else {
        if (toks.size() != 4) throw ParseError(lineno, "expected: matchedpair <G> <K> <H>");
        auto git = out.groups.find(toks[1]);
        auto kit = out.groups.find(toks[2]);
        auto hit = out.groups.find(toks[3]);
        if (git == out.groups.end() || kit == out.groups.end() || hit == out.groups.end())
          throw ParseError(lineno, "unknown group in matchedpair");
        try {
          out.pair = matched_pair_from_factorization(git->second, kit->second, hit->second);
        } catch (const std::exception& e) {
          throw ParseError(lineno, e.what());
        }
      }
    } else {
      throw ParseError(lineno, "unknown directive '" + kw + "'");
    }
  }
  finish_explicit();
  return out;
}

ParsedInput parse_input_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_input(buf.str());
}

}  // namespace bicross
