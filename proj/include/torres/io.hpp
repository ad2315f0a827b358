#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "torres/torsion.hpp"

namespace torres {

using Json = nlohmann::ordered_json;

namespace detail {

inline Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos || s.find('-', 1) != std::string::npos) {
      throw InputError("bad integer '" + s + "'");
    }
    return Integer(s);
  }
  throw InputError("expected an integer, got " + j.dump());
}

inline Json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return Json(static_cast<std::int64_t>(v));
  }
  return Json(v.str());
}

template <class R>
typename R::value_type entry_from_json(const R& ring, const Json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw InputError("fraction entries are [numerator, denominator]");
    auto den = integer_from_json(j[1]);
    if (den == 0) throw InputError("zero denominator in matrix entry");
    if constexpr (R::kind == RingKind::integers) {
      throw InputError("fraction entry in an integer representation");
    } else {
      return ring.from_fraction(integer_from_json(j[0]), den);
    }
  }
  if constexpr (R::kind == RingKind::prime_field) {
    return ring.from_integer(integer_from_json(j));
  } else {
    return typename R::value_type(integer_from_json(j));
  }
}

template <class R>
Json entry_to_json(const R&, const typename R::value_type& v) {
  if constexpr (R::kind == RingKind::rationals) {
    if (denominator(v) == 1) return integer_to_json(numerator(v));
    return Json::array({integer_to_json(numerator(v)), integer_to_json(denominator(v))});
  } else if constexpr (R::kind == RingKind::integers) {
    return integer_to_json(v);
  } else {
    return Json(v);
  }
}

}  // namespace detail

inline std::string generator_label(std::size_t g) { return "x" + std::to_string(g + 1); }

/// Ring named by a representation file: "Z", "Q", or "Fp" with a separate "p".
inline RingSpec representation_ring(const Json& j) {
  if (!j.is_object() || !j.contains("ring")) throw InputError("representation file needs a \"ring\" field");
  const auto name = j.at("ring").get<std::string>();
  if (name == "Fp") {
    if (!j.contains("p")) throw InputError("ring \"Fp\" needs a \"p\" field");
    const auto p = j.at("p").get<std::int64_t>();
    if (p < 2 || p >= (std::int64_t(1) << 31)) throw InputError("p out of range");
    return RingSpec::parse("F" + std::to_string(p));
  }
  return RingSpec::parse(name);
}

template <class R>
Representation<R> representation_from_json(const R& ring, const Json& j) {
  try {
    if (!(representation_ring(j) == ring_spec(ring))) {
      throw InputError("representation file is over " + representation_ring(j).name() + ", expected " + ring.name());
    }
    const auto n = j.at("n").get<std::int64_t>();
    if (n < 1) throw InputError("n must be positive");
    const auto& images = j.at("images");
    if (!images.is_object()) throw InputError("\"images\" must map generator labels to matrices");
    Representation<R> rep{ring, static_cast<std::size_t>(n), {}};
    for (std::size_t g = 0; g < images.size(); ++g) {
      const auto label = generator_label(g);
      if (!images.contains(label)) throw InputError("missing image for generator " + label);
      const auto& rows = images.at(label);
      if (!rows.is_array() || rows.size() != rep.n) throw InputError("image of " + label + " is not " + std::to_string(n) + " rows");
      Matrix<R> m(ring, rep.n, rep.n);
      for (std::size_t a = 0; a < rep.n; ++a) {
        if (!rows[a].is_array() || rows[a].size() != rep.n) throw InputError("image of " + label + " has a malformed row");
        for (std::size_t b = 0; b < rep.n; ++b) m(a, b) = detail::entry_from_json(ring, rows[a][b]);
      }
      rep.images.push_back(std::move(m));
    }
    return rep;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed representation file: ") + e.what());
  }
}

template <class R>
Json to_json(const Representation<R>& rep) {
  Json j;
  const auto spec = ring_spec(rep.ring);
  if (spec.kind == RingKind::prime_field) {
    j["ring"] = "Fp";
    j["p"] = spec.p;
  } else {
    j["ring"] = spec.name();
  }
  j["n"] = rep.n;
  Json images = Json::object();
  for (std::size_t g = 0; g < rep.images.size(); ++g) {
    Json rows = Json::array();
    for (std::size_t a = 0; a < rep.n; ++a) {
      Json row = Json::array();
      for (std::size_t b = 0; b < rep.n; ++b) row.push_back(detail::entry_to_json(rep.ring, rep.images[g](a, b)));
      rows.push_back(std::move(row));
    }
    images[generator_label(g)] = std::move(rows);
  }
  j["images"] = std::move(images);
  return j;
}

/// Report record; components are numbered from 1.
template <class R>
Json to_json(const TorresReport<R>& r, const std::string& link) {
  Json j;
  j["link"] = link;
  j["component"] = r.component + 1;
  j["ring"] = ring_spec(r.rhs_factor.ring()).name();
  j["n"] = r.n;
  j["case"] = to_string(r.kind);
  j["pass"] = r.pass;
  j["lhs_num"] = r.lhs_num;
  j["lhs_den"] = r.lhs_den;
  j["rhs_factor"] = r.rhs_factor_text;
  j["rhs_num"] = r.rhs_num;
  j["rhs_den"] = r.rhs_den;
  return j;
}

struct TableEntry {
  std::string name;
  std::string pd;
  std::optional<std::size_t> components;
};

/// Batch table: [{"name": ..., "pd": ..., "components": k?}, ...].
inline std::vector<TableEntry> parse_table(const Json& j) {
  if (!j.is_array()) throw InputError("link table must be a JSON array");
  std::vector<TableEntry> out;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("name") || !e.contains("pd") || !e["name"].is_string() || !e["pd"].is_string()) {
      throw InputError("table entries need string fields \"name\" and \"pd\"");
    }
    TableEntry t{e["name"].get<std::string>(), e["pd"].get<std::string>(), std::nullopt};
    if (e.contains("components")) {
      if (!e["components"].is_number_unsigned()) throw InputError("\"components\" must be a positive integer");
      t.components = e["components"].get<std::size_t>();
    }
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace torres
