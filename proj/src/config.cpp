#include "worm3/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <boost/algorithm/string/split.hpp>
#include <boost/algorithm/string/trim.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "worm3/errors.hpp"

namespace worm3 {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorKind::ConfigError, msg); }

template <class T>
T parse_number(const std::string& key, std::string s) {
  boost::algorithm::trim(s);
  T v{};
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) fail("bad number for '" + key + "': " + s);
  return v;
}

template <class T>
std::vector<T> parse_list(const std::string& key, const std::string& s) {
  std::vector<std::string> parts;
  boost::algorithm::split(parts, s, [](char c) { return c == ','; });
  std::vector<T> out;
  for (const auto& p : parts) out.push_back(parse_number<T>(key, p));
  return out;
}

using Setter = std::function<void(const std::string&, const std::string&)>;

Setter num(double& x, bool positive = false) {
  return [&x, positive](const std::string& k, const std::string& v) {
    x = parse_number<double>(k, v);
    if (positive && !(x > 0)) fail("'" + k + "' must be > 0");
  };
}
Setter integer(std::int64_t& x, std::int64_t min_value) {
  return [&x, min_value](const std::string& k, const std::string& v) {
    x = parse_number<std::int64_t>(k, v);
    if (x < min_value) fail("'" + k + "' must be >= " + std::to_string(min_value));
  };
}
Setter list(std::vector<double>& x) {
  return [&x](const std::string& k, const std::string& v) { x = parse_list<double>(k, v); };
}
Setter ilist(std::vector<std::int64_t>& x) {
  return [&x](const std::string& k, const std::string& v) { x = parse_list<std::int64_t>(k, v); };
}
Setter text(std::string& x) {
  return [&x](const std::string&, const std::string& v) { x = boost::algorithm::trim_copy(v); };
}

constexpr std::int64_t kMinResolution = 8;

}  // namespace

RunConfig parse_config(const std::string& body) {
  boost::property_tree::ptree tree;
  std::istringstream in(body);
  try {
    boost::property_tree::ini_parser::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    fail(e.what());
  }

  RunConfig c;
  std::int64_t threads = 0;
  std::string seed;
  std::map<std::string, std::map<std::string, Setter>> schema;
  schema["run"] = {{"seed", text(seed)}, {"threads", integer(threads, 0)}};
  auto& ce = c.certify;
  schema["certify"] = {{"profile", text(ce.profile)},
                       {"mu", num(ce.mu, true)},
                       {"mu_prime", num(ce.mu_prime, true)},
                       {"b_factor", num(ce.b_factor, true)},
                       {"a_over_b", num(ce.a_over_b, true)},
                       {"samples", integer(ce.samples, kMinResolution)},
                       {"grid", integer(ce.grid, kMinResolution)},
                       {"select_grid", integer(ce.select_grid, kMinResolution)},
                       {"tol", num(ce.tol, true)},
                       {"dilation", num(ce.dilation)},
                       {"sweep_steps", integer(ce.sweep_steps, 1)}};
  auto& se = c.select;
  schema["select"] = {{"mu", num(se.mu, true)},
                      {"b_factor", num(se.b_factor, true)},
                      {"a_over_b", num(se.a_over_b, true)},
                      {"grid", integer(se.grid, kMinResolution)},
                      {"delta", num(se.delta, true)}};
  auto& ke = c.kernel;
  schema["kernel"] = {{"mu", num(ke.mu, true)},
                      {"re", list(ke.re)},
                      {"im", list(ke.im)},
                      {"rel_tol", num(ke.rel_tol, true)},
                      {"tail_tol", num(ke.tail_tol, true)}};
  auto& no = c.norms;
  schema["norms"] = {{"mu", num(no.mu, true)}, {"a", list(no.a)},      {"b", list(no.b)},
                     {"j", ilist(no.j)},       {"k", ilist(no.k)},
                     {"mc_samples", integer(no.mc_samples, 0)}};
  auto& ne = c.nebenhulle;
  schema["nebenhulle"] = {{"mu", num(ne.mu, true)}, {"nodes", integer(ne.nodes, kMinResolution)}};

  for (const auto& [section, keys] : tree) {
    if (!keys.data().empty()) fail("key outside a section: " + section);
    auto s = schema.find(section);
    if (s == schema.end()) fail("unknown section [" + section + "]");
    for (const auto& [key, value] : keys) {
      auto k = s->second.find(key);
      if (k == s->second.end()) fail("unknown key '" + key + "' in [" + section + "]");
      k->second(section + "." + key, value.data());
    }
  }
  if (!seed.empty()) c.seed = parse_number<std::uint64_t>("run.seed", seed);
  c.threads = static_cast<int>(threads);
  if (ce.dilation < 0) fail("'certify.dilation' must be >= 0");
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail("cannot open config " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

}  // namespace worm3
