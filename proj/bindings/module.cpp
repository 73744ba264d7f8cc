#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "greenhall/hall.hpp"
#include "greenhall/json_io.hpp"
#include "greenhall/kostka.hpp"
#include "greenhall/suites.hpp"

namespace py = pybind11;
using namespace greenhall;

namespace {

py::object json_to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null:
      return py::none();
    case Json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case Json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float:
      return py::float_(j.get<double>());
    case Json::value_t::string:
      return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& v : j) out.append(json_to_py(v));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = json_to_py(v);
      return out;
    }
    default:
      return py::none();
  }
}

Json py_to_json(const py::handle& obj) {
  if (obj.is_none()) return nullptr;
  if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
  if (py::isinstance<py::int_>(obj)) return obj.cast<long long>();
  if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
  if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
  if (py::isinstance<py::dict>(obj)) {
    Json j = Json::object();
    for (auto item : obj.cast<py::dict>()) {
      j[py::str(item.first).cast<std::string>()] = py_to_json(item.second);
    }
    return j;
  }
  if (py::isinstance<py::sequence>(obj)) {
    Json j = Json::array();
    for (auto item : obj.cast<py::sequence>()) j.push_back(py_to_json(item));
    return j;
  }
  throw std::invalid_argument("unsupported value in JSON conversion");
}

Partition part(const std::vector<int>& v) { return Partition(v); }

std::vector<Rational> rationals(const py::sequence& seq) {
  std::vector<Rational> out;
  for (auto item : seq) out.push_back(Rational::parse(py::str(item).cast<std::string>()));
  return out;
}

// Laurent polynomials cross the boundary as {exponent: "p/q"} dicts.
py::dict poly_dict(const LaurentPoly& p) {
  py::dict d;
  for (const auto& [e, c] : p.coeffs()) d[py::int_(e)] = c.str();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Kostka-Foulkes / Hall / Green polynomials, Whittaker traces and "
            "DVR elementary divisors";

  m.def("enumerate_partitions",
        [](int n, int max_length) {
          std::vector<std::vector<int>> out;
          for (const Partition& p : enumerate_partitions(n, max_length)) {
            out.push_back(p.parts());
          }
          return out;
        },
        py::arg("n"), py::arg("max_length") = -1,
        "All partitions of n in reverse-lexicographic order.");

  m.def("dominance_leq",
        [](const std::vector<int>& mu, const std::vector<int>& lam) {
          return dominance_leq(part(mu), part(lam));
        },
        py::arg("mu"), py::arg("lam"),
        "True iff lam dominates mu (equal weights required).");

  m.def("n_stat", [](const std::vector<int>& lam) { return n_stat(part(lam)); });
  m.def("union_partition", [](const std::vector<int>& mu, const std::vector<int>& nu) {
    return union_partition(part(mu), part(nu)).parts();
  });
  m.def("multiplicities", [](const std::vector<int>& lam) {
    return multiplicities(part(lam));
  });
  m.def("conjugate", [](const std::vector<int>& lam) {
    return part(lam).conjugate().parts();
  });

  m.def("charge", &charge, py::arg("word"),
        "Lascoux-Schutzenberger charge of a word with partition content.");

  m.def("kostka_foulkes",
        [](const std::vector<int>& lam, const std::vector<int>& mu) {
          return poly_dict(kostka_foulkes(part(lam), part(mu)));
        },
        py::arg("shape"), py::arg("weight"));
  m.def("kostka_tilde",
        [](const std::vector<int>& lam, const std::vector<int>& mu) {
          return poly_dict(kostka_tilde(part(lam), part(mu)));
        },
        py::arg("shape"), py::arg("weight"));

  m.def("character_value",
        [](const std::vector<int>& lam, const std::vector<int>& cls) {
          return character_value(part(lam), part(cls));
        },
        py::arg("lam"), py::arg("cls"),
        "Irreducible symmetric group character value by Murnaghan-Nakayama.");
  m.def("character_table", [](int degree) {
    Json rows = Json::object();
    for (const Partition& lam : enumerate_partitions(degree)) {
      Json row = Json::object();
      for (const Partition& cls : enumerate_partitions(degree)) {
        row[cls.str()] = character_value(lam, cls);
      }
      rows[lam.str()] = row;
    }
    return json_to_py(rows);
  });
  m.def("lr_coefficient",
        [](const std::vector<int>& lam, const std::vector<int>& mu,
           const std::vector<int>& nu) {
          return lr_coefficient(part(lam), part(mu), part(nu));
        });

  m.def("schur_eval",
        [](const std::vector<int>& lam, const py::sequence& alpha) {
          return schur_eval(part(lam), rationals(alpha)).str();
        },
        py::arg("lam"), py::arg("alpha"),
        "Schur polynomial value at exact rationals, as a 'p/q' string.");

  m.def("count_submodules",
        [](const std::vector<int>& lam, const std::vector<int>& mu,
           const std::vector<int>& nu, long q) {
          return count_submodules(part(lam), part(mu), part(nu), q);
        },
        py::arg("lam"), py::arg("mu"), py::arg("nu"), py::arg("q"));
  m.def("hall_polynomial",
        [](const std::vector<int>& lam, const std::vector<int>& mu,
           const std::vector<int>& nu) {
          HallWitness wit;
          LaurentPoly g = hall_polynomial(part(lam), part(mu), part(nu), &wit);
          py::dict out;
          out["polynomial"] = poly_dict(g);
          py::list nodes;
          for (const HallSample& s : wit.nodes) {
            nodes.append(py::make_tuple(s.q, s.count));
          }
          out["nodes"] = nodes;
          out["holdout"] = py::make_tuple(wit.holdout.q, wit.holdout.count);
          return out;
        });
  m.def("aut_order_poly", [](const std::vector<int>& pi) {
    return poly_dict(aut_order_poly(part(pi)));
  });

  m.def("green_polynomial", [](const std::vector<int>& lam) {
    return json_to_py(to_json(green_polynomial(part(lam))));
  });
  m.def("x_polynomial", [](const std::vector<int>& lam) {
    return json_to_py(to_json(x_polynomial(part(lam))));
  });

  m.def("whittaker_local",
        [](const py::sequence& alpha, const std::string& q_x, const std::vector<int>& d) {
          return whittaker_local(rationals(alpha), Rational::parse(q_x), d).str();
        },
        py::arg("alpha"), py::arg("q_x"), py::arg("d"));
  m.def("whittaker_local_top",
        [](const py::sequence& alpha, const std::string& q_x, const std::vector<int>& d) {
          return whittaker_local_top(rationals(alpha), Rational::parse(q_x), d).str();
        },
        py::arg("alpha"), py::arg("q_x"), py::arg("d"));
  m.def("whittaker_global",
        [](const py::handle& spec, const py::handle& divisors, const std::string& mode) {
          LocalSystemSpec s = local_system_from_json(py_to_json(spec));
          DivisorTuple d = divisors_from_json(py_to_json(divisors));
          return whittaker_global(
                     s, d, mode == "top" ? WhittakerMode::kTop : WhittakerMode::kPlain)
              .str();
        },
        py::arg("spec"), py::arg("divisors"), py::arg("mode") = "plain");

  m.def("hom_order",
        [](const std::vector<int>& mu, const std::vector<int>& nu, long q) {
          return hom_order(part(mu), part(nu), q).str();
        });
  m.def("extension_count",
        [](const std::vector<int>& lam, const std::vector<int>& mu,
           const std::vector<int>& nu, long q) {
          return extension_count(part(lam), part(mu), part(nu), q).str();
        });
  m.def("hecke_check",
        [](long q, const std::vector<int>& mu, const std::vector<int>& nu,
           const py::sequence& alpha) {
          LocalHeckeInstance inst;
          inst.q = q;
          inst.mu = part(mu);
          inst.nu = part(nu);
          inst.eigenvalues = rationals(alpha);
          return json_to_py(to_json(hecke_identity_check(inst)));
        },
        py::arg("q"), py::arg("mu"), py::arg("nu"), py::arg("eigenvalues"));

  m.def("elementary_divisors_closed",
        [](const std::vector<int>& a, const std::vector<int>& d) {
          ValuationMatrixSpec spec;
          spec.a = a;
          spec.d = d;
          return elementary_divisors_closed(spec);
        },
        py::arg("a"), py::arg("d"));
  m.def("snf_check",
        [](const std::vector<int>& a, const std::vector<int>& d) {
          ValuationMatrixSpec spec;
          spec.a = a;
          spec.d = d;
          std::vector<int> dp = elementary_divisors_closed(spec);
          std::vector<int> chain = divisor_chain(dp);
          auto oracle = smith_valuations(build_matrix(spec));
          py::list oracle_py;
          bool agree = oracle.size() == chain.size();
          for (size_t i = 0; i < oracle.size(); ++i) {
            if (oracle[i]) {
              oracle_py.append(*oracle[i]);
              if (agree && chain[i] != *oracle[i]) agree = false;
            } else {
              oracle_py.append(py::none());
              agree = false;
            }
          }
          py::dict out;
          out["conforming"] = spec.conforming();
          out["closed_d_prime"] = dp;
          out["closed_chain"] = chain;
          out["smith_valuations"] = oracle_py;
          out["agree"] = agree;
          return out;
        },
        py::arg("a"), py::arg("d"));

  m.def("run_suite",
        [](const std::string& name, int bound, unsigned long seed, bool timings) {
          return json_to_py(report_to_json(run_identity_suite(name, bound, seed), timings));
        },
        py::arg("name"), py::arg("bound"), py::arg("seed") = 7, py::arg("timings") = false);
  m.def("suite_names", [] { return suite_names(); });
}
