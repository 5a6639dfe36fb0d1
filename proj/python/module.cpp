#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "termbind/alpha.hpp"
#include "termbind/errors.hpp"
#include "termbind/instances.hpp"
#include "termbind/io.hpp"
#include "termbind/recursion.hpp"
#include "termbind/sorting.hpp"
#include "termbind/subst.hpp"
#include "termbind/testkit.hpp"

namespace py = pybind11;
namespace tb = termbind;

namespace {

using PyVarRef = std::pair<std::string, std::string>;  // (varsort, name)

tb::VarName name_of(const std::string& s) {
  std::optional<tb::VarName> n = tb::VarName::parse(s);
  if (!n) throw py::value_error("invalid variable name '" + s + "'");
  return *n;
}

tb::VarRef ref_of(const PyVarRef& r) {
  return tb::VarRef{{r.first}, name_of(r.second)};
}

PyVarRef ref_out(const tb::VarRef& r) {
  return {r.sort.name, r.name.str()};
}

tb::Env env_of(const std::map<PyVarRef, tb::Term>& m) {
  tb::Env env;
  for (const auto& [k, t] : m) env.map.emplace(ref_of(k), t);
  return env;
}

std::string check_str(const tb::Signature& sig, const tb::Term& t) {
  tb::SortReport r = infer_sort(sig, t);
  if (r.is_sorted()) return r.sorted().sort.name;
  throw py::value_error(r.failure().detail);
}

}  // namespace

PYBIND11_MODULE(_termbind, m) {
  m.doc() =
      "Terms over many-sorted binding signatures: alpha-equivalence, "
      "capture-avoiding substitution, sorting, folds and evaluation.";

  py::register_exception<tb::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<tb::IllSorted>(m, "IllSorted", PyExc_ValueError);
  py::register_exception<tb::EvalError>(m, "EvalError", PyExc_ValueError);
  py::register_exception<tb::ValuationUndefined>(m, "ValuationUndefined",
                                                 PyExc_KeyError);

  py::class_<tb::Term>(m, "Term")
      .def("__str__", &tb::print_term)
      .def("__repr__",
           [](const tb::Term& t) { return "Term(" + tb::print_term(t) + ")"; })
      .def("__eq__", [](const tb::Term& a,
                        const tb::Term& b) { return eq_raw(a, b); })
      .def("__hash__",
           [](const tb::Term& t) {
             return py::hash(py::str(to_canonical(t).str()));
           })
      .def("is_var", &tb::Term::is_var);

  py::class_<tb::Signature>(m, "Signature")
      .def("__str__",
           [](const tb::Signature& s) { return tb::print_signature(s); })
      .def("sorts",
           [](const tb::Signature& s) {
             std::vector<std::string> out;
             for (const auto& x : s.sorts()) out.push_back(x.name);
             return out;
           })
      .def("varsorts",
           [](const tb::Signature& s) {
             std::vector<std::string> out;
             for (const auto& x : s.varsorts()) out.push_back(x.name);
             return out;
           })
      .def("sort_of_var",
           [](const tb::Signature& s, const std::string& vs) {
             return s.sort_of_var({vs}).name;
           })
      .def("is_in_bar", [](const tb::Signature& s, const std::string& vs,
                           const std::string& sort) {
        return s.is_in_bar({vs}, {sort});
      });

  m.def("parse_term", [](const std::string& s) { return tb::parse_term(s); });
  m.def("print_term", &tb::print_term);
  m.def("parse_signature", [](const std::string& s) {
    auto v = tb::validate_signature(tb::parse_signature(s));
    if (auto* errs = std::get_if<std::vector<tb::ValidationError>>(&v)) {
      std::string msg = "invalid signature:";
      for (const auto& e : *errs) msg += "\n  " + e.detail;
      throw py::value_error(msg);
    }
    return std::get<tb::Signature>(v);
  });

  m.def("alpha_eq", [](const tb::Term& a, const tb::Term& b) {
    return alpha_eq(a, b);
  });
  m.def(
      "alpha_eq_forall",
      [](const tb::Term& a, const tb::Term& b, std::size_t sample) {
        return tb::alpha_eq_forall(a, b, sample);
      },
      py::arg("a"), py::arg("b"), py::arg("sample") = 3);
  m.def("canonical_str",
        [](const tb::Term& t) { return to_canonical(t).str(); });

  m.def("free_vars", [](const tb::Term& t) {
    std::vector<PyVarRef> out;
    for (const tb::VarRef& v : free_vars(t)) out.push_back(ref_out(v));
    return out;
  });
  m.def("fresh", [](const std::string& vs, const std::string& name,
                    const tb::Term& t) {
    return tb::fresh({vs}, name_of(name), t);
  });
  m.def("fresh_var", [](const std::string& vs,
                        const std::vector<PyVarRef>& avoid) {
    std::set<tb::VarRef> a;
    for (const PyVarRef& r : avoid) a.insert(ref_of(r));
    return tb::fresh_var({vs}, a).str();
  });

  m.def("var", [](const std::string& vs, const std::string& name) {
    return tb::Term::var({vs}, name_of(name));
  });
  m.def("subst", [](const tb::Term& x, const tb::Term& y,
                    const std::string& var, const std::string& vs) {
    return tb::subst(x, y, name_of(var), {vs});
  });
  m.def("vsubst", [](const tb::Term& x, const std::string& to,
                     const std::string& var, const std::string& vs) {
    return tb::vsubst(x, name_of(to), name_of(var), {vs});
  });
  m.def("psubst", [](const tb::Term& x,
                     const std::map<PyVarRef, tb::Term>& env) {
    return tb::psubst(x, env_of(env));
  });
  m.def("swap", [](const tb::Term& x, const std::string& a,
                   const std::string& b, const std::string& vs) {
    return swap(x, name_of(a), name_of(b), tb::VarSortId{vs});
  });

  m.def("infer_sort", &check_str,
        "The term's sort under the signature; raises ValueError with the "
        "failure detail otherwise.");
  m.def("wls", [](const tb::Signature& sig, const std::string& sort,
                  const tb::Term& t) { return wls(sig, {sort}, t); });

  m.def(
      "refresh_binders",
      [](const tb::Term& t, const std::vector<PyVarRef>& avoid) {
        std::set<tb::VarRef> a;
        for (const PyVarRef& r : avoid) a.insert(ref_of(r));
        return tb::refresh_binders(t, a);
      },
      py::arg("t"), py::arg("avoid") = std::vector<PyVarRef>{});
  m.def("skel_str", [](const tb::Term& t) { return skel(t).str(); });

  m.def(
      "gen_term",
      [](const tb::Signature& sig, const std::string& sort,
         unsigned max_depth, std::uint64_t seed) {
        return tb::gen_term(tb::make_gen_config(sig, {sort}, max_depth, seed));
      },
      py::arg("sig"), py::arg("sort"), py::arg("max_depth") = 4,
      py::arg("seed") = 0);

  py::class_<tb::LambdaKit>(m, "LambdaKit")
      .def_static("standard", &tb::LambdaKit::standard)
      .def_static("from_signature", &tb::LambdaKit::from_signature)
      .def_readonly("sig", &tb::LambdaKit::sig)
      .def_property_readonly(
          "sort", [](const tb::LambdaKit& k) { return k.lam_sort.name; })
      .def("var", &tb::LambdaKit::var)
      .def("app", &tb::LambdaKit::app)
      .def("lam", &tb::LambdaKit::lam)
      .def("church", &tb::LambdaKit::church)
      .def("plus", &tb::LambdaKit::plus);
  m.def("beta_step", [](const tb::LambdaKit& kit, const tb::Term& t) {
    return beta_step(kit, t);
  });
  m.def(
      "normalize",
      [](const tb::LambdaKit& kit, const tb::Term& t, unsigned fuel) {
        return normalize(kit, t, fuel);
      },
      py::arg("kit"), py::arg("t"), py::arg("fuel") = 100);

  py::class_<tb::FiniteModel>(m, "FiniteModel")
      .def("__str__",
           [](const tb::FiniteModel& m_) { return tb::print_model(m_); })
      .def_readonly("carrier", &tb::FiniteModel::carrier);
  m.def("parse_model",
        [](const std::string& s) { return tb::parse_model(s); });

  py::class_<tb::FolKit>(m, "FolKit")
      .def(py::init<const std::map<std::string, unsigned>&,
                    const std::map<std::string, unsigned>&>(),
           py::arg("funs"), py::arg("preds"))
      .def_static("from_signature", &tb::FolKit::from_signature)
      .def_readonly("sig", &tb::FolKit::sig)
      .def("var", &tb::FolKit::var)
      .def("fun", &tb::FolKit::fun)
      .def("pred", &tb::FolKit::pred)
      .def("conj", &tb::FolKit::conj)
      .def("neg", &tb::FolKit::neg)
      .def("all", &tb::FolKit::all);
  m.def("validate_model", &tb::validate_model);
  m.def(
      "eval_fol",
      [](const tb::FolKit& kit, const tb::FiniteModel& model,
         const std::map<PyVarRef, tb::FolValue>& valuation,
         const tb::Term& t) {
        std::map<tb::VarRef, tb::FolValue> val;
        for (const auto& [k, v] : valuation) val.emplace(ref_of(k), v);
        return eval_fol(kit, model, val, t);
      },
      py::arg("kit"), py::arg("model"),
      py::arg("valuation") = std::map<PyVarRef, tb::FolValue>{},
      py::arg("t"));

  py::class_<tb::CcsKit>(m, "CcsKit")
      .def_static("standard", &tb::CcsKit::standard)
      .def_readonly("sig", &tb::CcsKit::sig)
      .def("var", &tb::CcsKit::var)
      .def("zero", &tb::CcsKit::zero)
      .def("plus", &tb::CcsKit::plus)
      .def("inp", &tb::CcsKit::inp)
      .def("out", &tb::CcsKit::out)
      .def("sum", &tb::CcsKit::sum);
}
