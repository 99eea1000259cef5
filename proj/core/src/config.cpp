#include "exmc/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <boost/property_tree/info_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "exmc/errors.hpp"

namespace exmc {

namespace pt = boost::property_tree;

namespace {

double parse_double(const std::string& text, const std::string& path) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto [p, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || p != end || text.empty()) {
    throw ConfigError(path, "expected a number, got '" + text + "'");
  }
  return v;
}

std::uint64_t parse_unsigned(const std::string& text, const std::string& path) {
  std::uint64_t v = 0;
  const char* end = text.data() + text.size();
  const auto [p, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || p != end || text.empty()) {
    throw ConfigError(path, "expected a non-negative integer, got '" + text + "'");
  }
  return v;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\n') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

ConfigBlock parse_block(const pt::ptree& tree, const std::string& path) {
  if (!tree.data().empty()) {
    throw ConfigError(path, "expected a { ... } block, got the value '" + tree.data() + "'");
  }
  ConfigBlock b;
  bool has_type = false;
  std::set<std::string> seen;
  for (const auto& [key, child] : tree) {
    if (key == "component") {
      b.components.push_back(
          parse_block(child, path + ".component[" + std::to_string(b.components.size()) + "]"));
      continue;
    }
    if (!child.empty()) throw ConfigError(path + "." + key, "unexpected nested block");
    if (!seen.insert(key).second) throw ConfigError(path + "." + key, "duplicate field");
    if (key == "type") {
      b.type = child.data();
      has_type = true;
    } else {
      b.params.emplace_back(key, child.data());
    }
  }
  if (!has_type || b.type.empty()) throw ConfigError(path + ".type", "missing block type");
  return b;
}

pt::ptree block_tree(const ConfigBlock& b) {
  pt::ptree t;
  t.put("type", b.type);
  for (const auto& [k, v] : b.params) t.add(k, v);
  for (const auto& c : b.components) t.add_child("component", block_tree(c));
  return t;
}

std::string join(const std::vector<std::string>& items) {
  std::string s;
  for (const auto& i : items) {
    if (!s.empty()) s += ' ';
    s += i;
  }
  return s;
}

}  // namespace

const std::string* ConfigBlock::find(std::string_view key) const {
  for (const auto& [k, v] : params) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::string to_string(AlgorithmChoice choice) {
  switch (choice) {
    case AlgorithmChoice::mh: return "mh";
    case AlgorithmChoice::exchange: return "exchange";
    case AlgorithmChoice::both: return "both";
  }
  return "unknown";
}

bool ExperimentConfig::has_check(std::string_view check) const {
  return std::find(checks.begin(), checks.end(), check) != checks.end();
}

std::string format_double(double v) {
  char buf[64];
  const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

ExperimentConfig parse_config(std::string_view text) {
  pt::ptree tree;
  try {
    std::istringstream in{std::string(text)};
    pt::read_info(in, tree);
  } catch (const pt::info_parser_error& e) {
    throw ConfigError("line " + std::to_string(e.line()), e.message());
  }
  ExperimentConfig c;
  std::set<std::string> seen;
  auto scalar = [](const pt::ptree& child, const std::string& key) -> const std::string& {
    if (!child.empty()) throw ConfigError(key, "expected a value, got a block");
    return child.data();
  };
  for (const auto& [key, child] : tree) {
    if (!seen.insert(key).second) throw ConfigError(key, "duplicate field");
    if (key == "name") {
      c.name = scalar(child, key);
    } else if (key == "algorithm") {
      const auto& v = scalar(child, key);
      if (v == "mh") c.algorithm = AlgorithmChoice::mh;
      else if (v == "exchange") c.algorithm = AlgorithmChoice::exchange;
      else if (v == "both") c.algorithm = AlgorithmChoice::both;
      else throw ConfigError(key, "expected mh, exchange or both, got '" + v + "'");
    } else if (key == "laziness") {
      c.laziness = parse_double(scalar(child, key), key);
      if (!(c.laziness > 0.0 && c.laziness <= 1.0)) throw ConfigError(key, "must lie in (0, 1]");
    } else if (key == "steps") {
      c.steps = parse_unsigned(scalar(child, key), key);
      if (c.steps < 1) throw ConfigError(key, "must be at least 1");
    } else if (key == "replications") {
      c.replications = parse_unsigned(scalar(child, key), key);
      if (c.replications < 2) throw ConfigError(key, "must be at least 2");
    } else if (key == "clt_steps") {
      c.clt_steps = parse_unsigned(scalar(child, key), key);
      if (c.clt_steps < 1) throw ConfigError(key, "must be at least 1");
    } else if (key == "batches") {
      c.batches = parse_unsigned(scalar(child, key), key);
      if (c.batches < 2) throw ConfigError(key, "must be at least 2");
    } else if (key == "seed") {
      c.seed = parse_unsigned(scalar(child, key), key);
    } else if (key == "data") {
      c.data = parse_double(scalar(child, key), key);
    } else if (key == "theta0") {
      c.theta0 = parse_double(scalar(child, key), key);
    } else if (key == "delta") {
      c.delta = parse_double(scalar(child, key), key);
      if (!(c.delta > 0.0 && c.delta < 1.0)) throw ConfigError(key, "must lie in (0, 1)");
    } else if (key == "checks") {
      c.checks = split_list(scalar(child, key));
      const auto& known = known_checks();
      for (std::size_t i = 0; i < c.checks.size(); ++i) {
        if (std::find(known.begin(), known.end(), c.checks[i]) == known.end()) {
          throw ConfigError("checks[" + std::to_string(i) + "]",
                            "unknown check '" + c.checks[i] + "'");
        }
      }
    } else if (key == "rejection_thetas") {
      const auto items = split_list(scalar(child, key));
      for (std::size_t i = 0; i < items.size(); ++i) {
        c.rejection_thetas.push_back(
            parse_double(items[i], "rejection_thetas[" + std::to_string(i) + "]"));
      }
    } else if (key == "model") {
      c.model = parse_block(child, key);
    } else if (key == "prior") {
      c.prior = parse_block(child, key);
    } else if (key == "proposal") {
      c.proposal = parse_block(child, key);
    } else if (key == "grid") {
      if (!child.data().empty()) throw ConfigError(key, "expected a { ... } block");
      GridConfig g;
      for (const auto& [gk, gv] : child) {
        const std::string path = "grid." + gk;
        if (gk == "lo") g.lo = parse_double(scalar(gv, path), path);
        else if (gk == "hi") g.hi = parse_double(scalar(gv, path), path);
        else if (gk == "K") g.size = parse_unsigned(scalar(gv, path), path);
        else throw ConfigError(path, "unknown field");
      }
      if (g.size < 2) throw ConfigError("grid.K", "must be at least 2");
      if (g.size > 2001) throw ConfigError("grid.K", "exceeds the grid budget of 2001");
      if (g.lo && g.hi && !(*g.lo < *g.hi)) throw ConfigError("grid.hi", "must exceed grid.lo");
      c.grid = g;
    } else {
      throw ConfigError(key, "unknown field");
    }
  }
  if (c.name.empty()) throw ConfigError("name", "missing experiment name");
  if (!seen.count("data")) throw ConfigError("data", "missing observation");
  if (c.model.type.empty()) throw ConfigError("model", "missing model block");
  if (c.prior.type.empty()) throw ConfigError("prior", "missing prior block");
  if (c.proposal.type.empty()) throw ConfigError("proposal", "missing proposal block");
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, "cannot open config file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string serialize_config(const ExperimentConfig& c) {
  pt::ptree t;
  t.put("name", c.name);
  t.put("algorithm", to_string(c.algorithm));
  t.put("laziness", format_double(c.laziness));
  t.put("steps", c.steps);
  t.put("replications", c.replications);
  t.put("clt_steps", c.clt_steps);
  t.put("batches", c.batches);
  if (c.seed) t.put("seed", *c.seed);
  t.put("data", format_double(c.data));
  if (c.theta0) t.put("theta0", format_double(*c.theta0));
  t.put("delta", format_double(c.delta));
  t.put("checks", join(c.checks));
  t.add_child("model", block_tree(c.model));
  t.add_child("prior", block_tree(c.prior));
  t.add_child("proposal", block_tree(c.proposal));
  if (c.grid) {
    pt::ptree g;
    if (c.grid->lo) g.put("lo", format_double(*c.grid->lo));
    if (c.grid->hi) g.put("hi", format_double(*c.grid->hi));
    g.put("K", c.grid->size);
    t.add_child("grid", g);
  }
  if (!c.rejection_thetas.empty()) {
    std::vector<std::string> items;
    for (double v : c.rejection_thetas) items.push_back(format_double(v));
    t.put("rejection_thetas", join(items));
  }
  std::ostringstream out;
  pt::write_info(out, t, pt::info_writer_make_settings(' ', 2));
  return out.str();
}

}  // namespace exmc
