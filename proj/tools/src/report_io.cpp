#include "report_io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace cfvar::cli {

namespace {

std::string number(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write(std::ostringstream& o, const Json& j, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(indent * depth), ' ');
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        o << "{}";
        return;
      }
      o << "{" << nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) o << "," << nl;
        first = false;
        o << pad << Json(it.key()).dump() << (indent > 0 ? ": " : ":");
        write(o, it.value(), indent, depth + 1);
      }
      o << nl << close << "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        o << "[]";
        return;
      }
      o << "[" << nl;
      for (std::size_t k = 0; k < j.size(); ++k) {
        if (k) o << "," << nl;
        o << pad;
        write(o, j[k], indent, depth + 1);
      }
      o << nl << close << "]";
      return;
    }
    case Json::value_t::number_float:
      o << number(j.get<double>());
      return;
    default:
      o << j.dump();
  }
}

void text(std::ostringstream& o, const Json& j, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * depth), ' ');
  auto scalar = [](const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_float()) return number(v.get<double>());
    return v.dump();
  };
  auto flat = [&](const Json& v) {
    if (!v.is_array()) return false;
    for (const auto& x : v)
      if (x.is_structured()) return false;
    return true;
  };
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const Json& v = it.value();
      if (v.is_structured() && !flat(v)) {
        o << pad << it.key() << ":\n";
        text(o, v, depth + 1);
      } else if (flat(v)) {
        o << pad << it.key() << ": [";
        for (std::size_t k = 0; k < v.size(); ++k) o << (k ? ", " : "") << scalar(v[k]);
        o << "]\n";
      } else {
        o << pad << it.key() << ": " << scalar(v) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (std::size_t k = 0; k < j.size(); ++k) {
      o << pad << "[" << k << "]\n";
      text(o, j[k], depth + 1);
    }
  } else {
    o << pad << scalar(j) << "\n";
  }
}

}  // namespace

std::string dump_json(const Json& j, int indent) {
  std::ostringstream o;
  write(o, j, indent, 0);
  o << "\n";
  return o.str();
}

std::string render_text(const Json& j) {
  std::ostringstream o;
  text(o, j, 0);
  return o.str();
}

void write_residual_csv(std::ostream& out, const ChartGeometry& geo, const ResidualField& res) {
  const int m = geo.m(), D = geo.D();
  out << "point,interior";
  for (int a = 0; a < m; ++a) out << ",u" << a;
  for (const char* f : {"W1", "W2", "CF"})
    for (int c = 0; c < D; ++c) out << "," << f << "_" << c;
  out << ",W1_norm,W2_norm,CF_norm\n";
  char buf[40];
  auto num = [&](double x) {
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return std::string(buf);
  };
  for (std::size_t p = 0; p < geo.size(); ++p) {
    out << p << "," << (geo.is_interior(p) ? 1 : 0);
    for (double u : geo.grid().coords(p)) out << "," << num(u);
    double norms[3] = {0, 0, 0};
    int k = 0;
    for (const Field* f : {&res.w1, &res.w2, &res.cf}) {
      for (int c = 0; c < D; ++c) {
        const double v = f->at(p)[c];
        out << "," << num(v);
        norms[k] += v * v;
      }
      ++k;
    }
    for (double n2 : norms) out << "," << num(std::sqrt(n2));
    out << "\n";
  }
}

}  // namespace cfvar::cli
