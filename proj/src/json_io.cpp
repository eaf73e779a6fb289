#include "rhkit/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "rhkit/errors.hpp"

namespace rhkit {

const ojson& require_field(const ojson& j, const char* name) {
  if (!j.is_object()) throw InputError(std::string("expected an object holding \"") + name + "\"");
  const auto it = j.find(name);
  if (it == j.end()) throw InputError(std::string("missing field \"") + name + "\"");
  return *it;
}

double require_double(const ojson& j, const char* name) {
  const ojson& v = require_field(j, name);
  if (!v.is_number()) throw InputError(std::string("field \"") + name + "\" must be a number");
  return v.get<double>();
}

int require_int(const ojson& j, const char* name) {
  const ojson& v = require_field(j, name);
  if (!v.is_number_integer()) {
    throw InputError(std::string("field \"") + name + "\" must be an integer");
  }
  return v.get<int>();
}

ojson complex_to_json(cd z) { return ojson::array({z.real(), z.imag()}); }

cd complex_from_json(const ojson& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw InputError(std::string(what) + " must be a [re, im] pair");
  }
  return cd(j[0].get<double>(), j[1].get<double>());
}

ClosedCurve curve_from_json(const ojson& j) {
  const ojson& kind = require_field(j, "kind");
  const int n = require_int(j, "n");
  if (kind == "unit_circle") return ClosedCurve::unit_circle(n);
  if (kind != "fourier") throw InputError("field \"kind\" must be \"unit_circle\" or \"fourier\"");

  const ojson& coeffs = require_field(j, "coeffs");
  if (!coeffs.is_array() || coeffs.empty()) {
    throw InputError("field \"coeffs\" must be a nonempty array");
  }
  int bandwidth = 0;
  for (const ojson& c : coeffs) {
    bandwidth = std::max(bandwidth, std::abs(require_int(c, "m")));
  }
  std::vector<cd> flat(static_cast<size_t>(2 * bandwidth + 1), cd(0.0));
  for (const ojson& c : coeffs) {
    const int m = require_int(c, "m");
    flat[static_cast<size_t>(m + bandwidth)] =
        cd(require_double(c, "re"), require_double(c, "im"));
  }
  return ClosedCurve::fourier(flat, n);
}

ojson curve_to_json(const ClosedCurve& c) {
  ojson j;
  if (c.kind == ClosedCurve::Kind::UnitCircle) {
    j["kind"] = "unit_circle";
    j["n"] = c.n;
    return j;
  }
  j["kind"] = "fourier";
  j["n"] = c.n;
  ojson coeffs = ojson::array();
  const int bw = c.bandwidth;
  for (int m = -bw; m <= bw; ++m) {
    const cd v = c.coeffs[static_cast<size_t>(m + bw)];
    if (v == cd(0.0)) continue;
    ojson entry;
    entry["m"] = m;
    entry["re"] = v.real();
    entry["im"] = v.imag();
    coeffs.push_back(std::move(entry));
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

BoundaryFunction samples_from_json(const ojson& j) {
  const int r = require_int(j, "r");
  if (r < 1) throw InputError("field \"r\" must be a positive integer");
  const ojson& values = require_field(j, "values");
  if (!values.is_array() || values.empty()) {
    throw InputError("field \"values\" must be a nonempty array");
  }
  BoundaryFunction u;
  u.r = r;
  const int n = static_cast<int>(values.size());
  u.values.resize(static_cast<size_t>(n) * r * r);
  for (int k = 0; k < n; ++k) {
    const ojson& node = values[static_cast<size_t>(k)];
    if (r == 1) {
      u.at(k) = complex_from_json(node, "entry of \"values\"");
      continue;
    }
    if (!node.is_array() || static_cast<int>(node.size()) != r) {
      throw InputError("each entry of \"values\" must hold r rows");
    }
    for (int i = 0; i < r; ++i) {
      const ojson& row = node[static_cast<size_t>(i)];
      if (!row.is_array() || static_cast<int>(row.size()) != r) {
        throw InputError("each matrix row in \"values\" must hold r entries");
      }
      for (int c = 0; c < r; ++c) {
        u.at(k, i, c) = complex_from_json(row[static_cast<size_t>(c)], "matrix entry");
      }
    }
  }
  return u;
}

ojson samples_to_json(const BoundaryFunction& u) {
  ojson j;
  j["r"] = u.r;
  ojson values = ojson::array();
  const int n = u.nodes();
  for (int k = 0; k < n; ++k) {
    if (u.r == 1) {
      values.push_back(complex_to_json(u.at(k)));
      continue;
    }
    ojson node = ojson::array();
    for (int i = 0; i < u.r; ++i) {
      ojson row = ojson::array();
      for (int c = 0; c < u.r; ++c) row.push_back(complex_to_json(u.at(k, i, c)));
      node.push_back(std::move(row));
    }
    values.push_back(std::move(node));
  }
  j["values"] = std::move(values);
  return j;
}

ojson matrix_to_json(const std::vector<cd>& entries, int r) {
  ojson rows = ojson::array();
  for (int i = 0; i < r; ++i) {
    ojson row = ojson::array();
    for (int c = 0; c < r; ++c) {
      row.push_back(complex_to_json(entries[static_cast<size_t>(i) * r + c]));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

void append_number(std::string& out, const ojson& j) {
  if (j.is_number_integer()) {
    out += std::to_string(j.get<long long>());
    return;
  }
  if (j.is_number_unsigned()) {
    out += std::to_string(j.get<unsigned long long>());
    return;
  }
  const double v = j.get<double>();
  if (!std::isfinite(v)) {
    out += "null";
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

bool all_primitive(const ojson& j) {
  for (const ojson& e : j) {
    if (e.is_object() || e.is_array()) return false;
  }
  return true;
}

void dump_rec(const ojson& j, std::string& out, int indent, int depth) {
  const std::string pad(static_cast<size_t>(indent) * (depth + 1), ' ');
  const std::string close_pad(static_cast<size_t>(indent) * depth, ' ');
  switch (j.type()) {
    case ojson::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        out += ojson(it.key()).dump();
        out += ": ";
        dump_rec(it.value(), out, indent, depth + 1);
      }
      out += "\n";
      out += close_pad;
      out += "}";
      return;
    }
    case ojson::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      if (all_primitive(j)) {
        out += "[";
        bool first = true;
        for (const ojson& e : j) {
          if (!first) out += ", ";
          first = false;
          dump_rec(e, out, indent, depth);
        }
        out += "]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const ojson& e : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        dump_rec(e, out, indent, depth + 1);
      }
      out += "\n";
      out += close_pad;
      out += "]";
      return;
    }
    case ojson::value_t::string:
      out += j.dump();
      return;
    case ojson::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      return;
    case ojson::value_t::null:
      out += "null";
      return;
    default:
      append_number(out, j);
      return;
  }
}

}  // namespace

std::string dump_deterministic(const ojson& j, int indent) {
  std::string out;
  dump_rec(j, out, indent, 0);
  out += "\n";
  return out;
}

}  // namespace rhkit
