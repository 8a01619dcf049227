// Copyright 2026 The holoalg authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "holoalg/canonical.hpp"
#include "holoalg/collapse.hpp"
#include "holoalg/holant.hpp"
#include "holoalg/linalg.hpp"
#include "holoalg/matchgate.hpp"
#include "holoalg/scalar.hpp"
#include "holoalg/signature.hpp"
#include "holoalg/transforms.hpp"

namespace py = pybind11;
using namespace holoalg;

namespace {

// Exact conversions only: Scalar, str, int, and anything that renders as
// a rational through str() (fractions.Fraction). Floats are rejected.
Scalar to_scalar(py::handle h) {
  if (py::isinstance<Scalar>(h)) return h.cast<Scalar>();
  if (py::isinstance<py::str>(h)) return Scalar::parse(h.cast<std::string>());
  if (py::isinstance<py::int_>(h))
    return Scalar::parse(py::str(h).cast<std::string>());
  if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator"))
    return Scalar::parse(py::str(h).cast<std::string>());
  throw py::type_error("expected an exact scalar, got " +
                       py::str(py::type::of(h)).cast<std::string>());
}

std::vector<Scalar> to_scalars(py::sequence seq) {
  std::vector<Scalar> out;
  out.reserve(py::len(seq));
  for (py::handle h : seq) out.push_back(to_scalar(h));
  return out;
}

py::object rational_to_fraction(const Rational& q) {
  return py::module_::import("fractions").attr("Fraction")(rational_str(q));
}

StepSide step_side(const std::string& side) {
  if (side == "in") return StepSide::Input;
  if (side == "out") return StepSide::Output;
  throw std::invalid_argument("side must be 'in' or 'out', got '" + side +
                              "'");
}

std::string step_side_name(StepSide side) {
  return side == StepSide::Input ? "in" : "out";
}

std::string step_kind_name(StepKind kind) {
  switch (kind) {
    case StepKind::Flip: return "flip";
    case StepKind::GlobalFactor: return "global_factor";
    case StepKind::Exchange: return "exchange";
    case StepKind::Bar: return "bar";
    case StepKind::Slash: return "slash";
  }
  throw std::logic_error("unknown step kind");
}

VertexSide vertex_side(const std::string& side) {
  if (side == "left") return VertexSide::Left;
  if (side == "right") return VertexSide::Right;
  throw std::invalid_argument("side must be 'left' or 'right', got '" + side +
                              "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact algebra of constraint signatures on bipartite instances: "
      "evaluation, matchgate recognition, transformation logs, canonical "
      "matching forms and base collapses, all over rational complex "
      "numbers.";

  py::class_<Scalar>(m, "Scalar",
                     "A complex number with exact rational parts.")
      .def(py::init([](py::object v) { return to_scalar(v); }), py::arg("value"))
      .def(py::init([](py::object re, py::object im) {
             Scalar r = to_scalar(re), i = to_scalar(im);
             if (!r.is_real() || !i.is_real())
               throw std::invalid_argument(
                   "both parts must be real rationals");
             return Scalar(r.real(), i.real());
           }),
           py::arg("real"), py::arg("imag"))
      .def_static("i", &Scalar::i)
      .def_static("parse", &Scalar::parse, py::arg("text"))
      .def_property_readonly(
          "real", [](const Scalar& s) { return rational_to_fraction(s.real()); })
      .def_property_readonly(
          "imag", [](const Scalar& s) { return rational_to_fraction(s.imag()); })
      .def("is_zero", &Scalar::is_zero)
      .def("is_real", &Scalar::is_real)
      .def("conj", &Scalar::conj)
      .def("inverse", &Scalar::inverse)
      .def("compact_str", &Scalar::compact_str)
      .def("__str__", &Scalar::compact_str)
      .def("__repr__",
           [](const Scalar& s) { return "Scalar('" + s.compact_str() + "')"; })
      .def("__neg__", [](const Scalar& s) { return -s; })
      .def("__add__", [](const Scalar& a, py::object b) { return a + to_scalar(b); })
      .def("__radd__", [](const Scalar& a, py::object b) { return to_scalar(b) + a; })
      .def("__sub__", [](const Scalar& a, py::object b) { return a - to_scalar(b); })
      .def("__rsub__", [](const Scalar& a, py::object b) { return to_scalar(b) - a; })
      .def("__mul__", [](const Scalar& a, py::object b) { return a * to_scalar(b); })
      .def("__rmul__", [](const Scalar& a, py::object b) { return to_scalar(b) * a; })
      .def("__truediv__", [](const Scalar& a, py::object b) { return a / to_scalar(b); })
      .def("__rtruediv__", [](const Scalar& a, py::object b) { return to_scalar(b) / a; })
      .def("__eq__",
           [](const Scalar& a, py::object b) {
             try {
               return a == to_scalar(b);
             } catch (const std::exception&) {
               return false;
             }
           })
      .def("__hash__", [](const Scalar& s) { return py::hash(py::str(s.str())); });
  py::implicitly_convertible<py::int_, Scalar>();
  py::implicitly_convertible<py::str, Scalar>();

  py::class_<Signature>(
      m, "Signature",
      "A dense tensor over a list of variable domains; variable 1 is the "
      "most significant index.")
      .def(py::init([](std::vector<int> domains) {
             return Signature(std::move(domains));
           }),
           py::arg("domains"))
      .def(py::init([](std::vector<int> domains, py::sequence values) {
             return Signature(std::move(domains), to_scalars(values));
           }),
           py::arg("domains"), py::arg("values"))
      .def_static(
          "constant",
          [](py::object v) { return Signature::constant(to_scalar(v)); },
          py::arg("value"))
      .def_property_readonly("arity", &Signature::arity)
      .def_property_readonly("domains", &Signature::domains)
      .def("__len__", &Signature::size)
      .def_property_readonly("values", &Signature::values)
      .def("value",
           [](const Signature& f, std::size_t flat) { return f.value(flat); },
           py::arg("flat"))
      .def("value",
           [](const Signature& f, const std::vector<int>& point) {
             return f.value(point);
           },
           py::arg("point"))
      .def("set_value",
           [](Signature& f, std::size_t flat, py::object v) {
             if (flat >= f.size()) throw py::index_error();
             f.value(flat) = to_scalar(v);
           },
           py::arg("flat"), py::arg("value"))
      .def("flat_index", &Signature::flat_index, py::arg("point"))
      .def("unflatten", &Signature::unflatten, py::arg("flat"))
      .def("stride", &Signature::stride, py::arg("var"))
      .def("is_zero", &Signature::is_zero)
      .def("all_binary", &Signature::all_binary)
      .def("reshape", &Signature::reshape, py::arg("new_domains"))
      .def("permute", &Signature::permute, py::arg("perm"))
      .def(py::self == py::self)
      .def("__repr__", [](const Signature& f) {
        std::ostringstream os;
        os << "Signature(domains=[";
        for (std::size_t i = 0; i < f.domains().size(); ++i)
          os << (i ? ", " : "") << f.domains()[i];
        os << "])";
        return os.str();
      });

  m.def("tensor_product", &tensor_product, py::arg("a"), py::arg("b"));
  m.def(
      "scale",
      [](const Signature& a, py::object c) { return scale(a, to_scalar(c)); },
      py::arg("a"), py::arg("c"));

  py::class_<ScalarMatrix>(m, "Matrix", "A dense matrix of exact scalars.")
      .def(py::init<std::size_t, std::size_t>(), py::arg("rows"),
           py::arg("cols"))
      .def(py::init([](std::size_t r, std::size_t c, py::sequence values) {
             return ScalarMatrix(r, c, to_scalars(values));
           }),
           py::arg("rows"), py::arg("cols"), py::arg("values"))
      .def_static("identity", &ScalarMatrix::identity, py::arg("n"))
      .def_readonly("rows", &ScalarMatrix::rows)
      .def_readonly("cols", &ScalarMatrix::cols)
      .def("at",
           [](const ScalarMatrix& m_, std::size_t r, std::size_t c) {
             if (r >= m_.rows || c >= m_.cols) throw py::index_error();
             return m_.at(r, c);
           },
           py::arg("row"), py::arg("col"))
      .def("set",
           [](ScalarMatrix& m_, std::size_t r, std::size_t c, py::object v) {
             if (r >= m_.rows || c >= m_.cols) throw py::index_error();
             m_.at(r, c) = to_scalar(v);
           },
           py::arg("row"), py::arg("col"), py::arg("value"))
      .def("is_zero", &ScalarMatrix::is_zero)
      .def("to_lists",
           [](const ScalarMatrix& m_) {
             py::list rows;
             for (std::size_t r = 0; r < m_.rows; ++r) {
               py::list row;
               for (std::size_t c = 0; c < m_.cols; ++c)
                 row.append(m_.at(r, c));
               rows.append(row);
             }
             return rows;
           })
      .def(py::self == py::self)
      .def("__repr__", [](const ScalarMatrix& m_) {
        return "Matrix(" + std::to_string(m_.rows) + ", " +
               std::to_string(m_.cols) + ")";
      });

  m.def("mul", &mul, py::arg("a"), py::arg("b"));
  m.def("transpose", &transpose, py::arg("a"));
  m.def("kron",
        static_cast<ScalarMatrix (*)(const ScalarMatrix&, const ScalarMatrix&)>(
            &kron),
        py::arg("a"), py::arg("b"));
  m.def("kron_power", &kron_power, py::arg("a"), py::arg("k"));
  m.def("rank", static_cast<std::size_t (*)(ScalarMatrix)>(&rank),
        py::arg("a"));
  m.def("determinant", &determinant, py::arg("a"));
  m.def("pivot_rows", &pivot_rows, py::arg("a"));
  m.def("solve_left", &solve_left, py::arg("b"), py::arg("m"),
        "The matrix c with c * b == m, or None.");

  py::class_<MatrixView>(
      m, "MatrixView",
      "A signature read as a matrix: the first s variables index rows, "
      "the rest index columns with the last variable most significant.")
      .def(py::init<Signature, int>(), py::arg("signature"), py::arg("s"))
      .def_property_readonly("s", &MatrixView::s)
      .def_property_readonly("t", &MatrixView::t)
      .def_property_readonly("signature", &MatrixView::signature)
      .def_property_readonly("row_count", &MatrixView::row_count)
      .def_property_readonly("col_count", &MatrixView::col_count)
      .def("row_domains", &MatrixView::row_domains)
      .def("col_domains", &MatrixView::col_domains)
      .def("flat_of", &MatrixView::flat_of, py::arg("row"), py::arg("col"))
      .def("entry", &MatrixView::entry, py::arg("row"), py::arg("col"))
      .def("to_matrix", &MatrixView::to_matrix)
      .def_static("from_matrix", &MatrixView::from_matrix, py::arg("m"),
                  py::arg("row_domains"), py::arg("col_domains"))
      .def(py::self == py::self);

  m.def("regroup", &regroup, py::arg("signature"), py::arg("s"));
  m.def("matrix_product", &matrix_product, py::arg("a"), py::arg("b"));
  m.def("kron",
        static_cast<MatrixView (*)(const MatrixView&, const MatrixView&)>(
            &kron),
        py::arg("a"), py::arg("b"));
  m.def("identity_view", &identity_view, py::arg("domains"));
  m.def("rank", static_cast<std::size_t (*)(const MatrixView&)>(&rank),
        py::arg("view"));

  py::class_<TransformStep>(m, "TransformStep")
      .def_property_readonly(
          "kind", [](const TransformStep& s) { return step_kind_name(s.kind); })
      .def_property_readonly(
          "side", [](const TransformStep& s) { return step_side_name(s.side); })
      .def_readonly("position", &TransformStep::position)
      .def_readonly("value", &TransformStep::value)
      .def(py::self == py::self)
      .def("__repr__", [](const TransformStep& s) {
        std::string text = log_to_text({s});
        if (!text.empty() && text.back() == '\n') text.pop_back();
        return "<TransformStep " + text + ">";
      });

  m.def(
      "flip",
      [](const std::string& side, int pos) {
        return TransformStep::flip(step_side(side), pos);
      },
      py::arg("side"), py::arg("position"));
  m.def(
      "global_factor",
      [](py::object c) { return TransformStep::global_factor(to_scalar(c)); },
      py::arg("factor"));
  m.def(
      "exchange",
      [](const std::string& side, int pos) {
        return TransformStep::exchange(step_side(side), pos);
      },
      py::arg("side"), py::arg("position"));
  m.def(
      "bar",
      [](const std::string& side, int pos, py::object w) {
        return TransformStep::bar(step_side(side), pos, to_scalar(w));
      },
      py::arg("side"), py::arg("position"), py::arg("weight"));
  m.def(
      "slash",
      [](const std::string& side, int pos, py::object w) {
        return TransformStep::slash(step_side(side), pos, to_scalar(w));
      },
      py::arg("side"), py::arg("position"), py::arg("weight"));
  m.def(
      "exchange_with_factor",
      [](const std::string& side, int pos) {
        return exchange_with_factor(step_side(side), pos);
      },
      py::arg("side"), py::arg("position"));
  m.def("step_matrix", &step_matrix, py::arg("step"));
  m.def("invert_step", &invert_step, py::arg("step"));
  m.def("invert", &invert, py::arg("log"));
  m.def("apply", &apply, py::arg("step"), py::arg("view"));
  m.def("replay", &replay, py::arg("log"), py::arg("view"));
  m.def("apply_as_inputs", &apply_as_inputs, py::arg("log"),
        py::arg("signature"));
  m.def("log_to_text", &log_to_text, py::arg("log"));
  m.def("log_from_text", &log_from_text, py::arg("text"));

  py::class_<Instance>(
      m, "Instance",
      "A bipartite constraint network; every edge carries one variable "
      "and the value is the sum over assignments of the product of the "
      "vertex function values.")
      .def(py::init<>())
      .def_readwrite("domain_size", &Instance::domain_size)
      .def_property_readonly(
          "signatures", [](const Instance& inst) { return inst.signatures; })
      .def("set_signature",
           [](Instance& inst, const std::string& name, const Signature& sig) {
             inst.signatures[name] = sig;
           },
           py::arg("name"), py::arg("signature"))
      .def_property_readonly("left",
                             [](const Instance& inst) { return inst.left; })
      .def_property_readonly("right",
                             [](const Instance& inst) { return inst.right; })
      .def("add_left",
           [](Instance& inst, const std::string& name) {
             inst.left.push_back(name);
             return static_cast<int>(inst.left.size()) - 1;
           },
           py::arg("name"), "Appends a left vertex; returns its index.")
      .def("add_right",
           [](Instance& inst, const std::string& name) {
             inst.right.push_back(name);
             return static_cast<int>(inst.right.size()) - 1;
           },
           py::arg("name"), "Appends a right vertex; returns its index.")
      .def_property_readonly("edges",
                             [](const Instance& inst) {
                               py::list out;
                               for (const Edge& e : inst.edges)
                                 out.append(py::make_tuple(
                                     py::make_tuple(e.left.vertex, e.left.slot),
                                     py::make_tuple(e.right.vertex,
                                                    e.right.slot)));
                               return out;
                             })
      .def("add_edge",
           [](Instance& inst, int lv, int ls, int rv, int rs) {
             inst.edges.push_back({{lv, ls}, {rv, rs}});
           },
           py::arg("left_vertex"), py::arg("left_slot"),
           py::arg("right_vertex"), py::arg("right_slot"))
      .def_property_readonly(
          "dangling",
          [](const Instance& inst) {
            py::list out;
            for (const DanglingRef& d : inst.dangling)
              out.append(py::make_tuple(
                  d.side == VertexSide::Left ? "left" : "right", d.at.vertex,
                  d.at.slot));
            return out;
          })
      .def("add_dangling",
           [](Instance& inst, const std::string& side, int v, int s) {
             inst.dangling.push_back({vertex_side(side), {v, s}});
           },
           py::arg("side"), py::arg("vertex"), py::arg("slot"))
      .def("left_signature", &Instance::left_signature, py::arg("vertex"))
      .def("right_signature", &Instance::right_signature, py::arg("vertex"))
      .def("validate", &Instance::validate);

  m.def("evaluate", &evaluate, py::arg("instance"));
  m.def("gadget_signature", &gadget_signature, py::arg("instance"));
  m.def("transform_left", &transform_left, py::arg("signature"), py::arg("m"));
  m.def("transform_right", &transform_right, py::arg("m"),
        py::arg("signature"));
  m.def("transform_left_side", &transform_left_side, py::arg("instance"),
        py::arg("m"));
  m.def("transform_right_side", &transform_right_side, py::arg("instance"),
        py::arg("m"));
  m.def("holant_pair", &holant_pair, py::arg("instance"), py::arg("basis"));
  m.def(
      "verify_holant",
      [](std::uint64_t seed, int trials) {
        std::ostringstream log;
        bool ok = verify_holant(seed, trials, &log);
        return py::make_tuple(ok, log.str());
      },
      py::arg("seed"), py::arg("trials"),
      "Checks both side rewrites of random closed instances under random "
      "invertible bases; returns (ok, log).");
  m.def("instance_to_json", &instance_to_json_text, py::arg("instance"));
  m.def("instance_from_json", &instance_from_json_text, py::arg("text"));

  py::class_<UnderlyingGraph>(
      m, "Graph",
      "A weighted graph on vertices 1..n with exact skew-symmetric edge "
      "weights; an optional split marks the first vertices as inputs.")
      .def(py::init<int, int>(), py::arg("n"), py::arg("split") = -1)
      .def_property_readonly("size", &UnderlyingGraph::size)
      .def_property_readonly("split", &UnderlyingGraph::split)
      .def("set_split", &UnderlyingGraph::set_split, py::arg("split"))
      .def_property_readonly("inputs", &UnderlyingGraph::inputs)
      .def_property_readonly("outputs", &UnderlyingGraph::outputs)
      .def("weight", &UnderlyingGraph::weight, py::arg("i"), py::arg("j"))
      .def("set_weight",
           [](UnderlyingGraph& g, int i, int j, py::object w) {
             g.set_weight(i, j, to_scalar(w));
           },
           py::arg("i"), py::arg("j"), py::arg("weight"))
      .def("weights",
           [](const UnderlyingGraph& g) { return g.weights(); })
      .def("is_bipartite", &UnderlyingGraph::is_bipartite)
      .def(py::self == py::self)
      .def("__repr__", [](const UnderlyingGraph& g) {
        return "Graph(n=" + std::to_string(g.size()) +
               ", split=" + std::to_string(g.split()) + ")";
      });

  m.def("pfaffian", &pfaffian, py::arg("graph"));
  m.def("signature_from_graph", &signature_from_graph, py::arg("graph"));
  m.def("support_anchor", &support_anchor, py::arg("signature"));
  m.def("bipartite_matrix", &bipartite_matrix, py::arg("graph"));
  m.def("bipartite_from_matrix", &bipartite_from_matrix, py::arg("b"));
  m.def("multiply_introduced", &multiply_introduced, py::arg("g1"),
        py::arg("g2"));
  m.def("crossover_signature", &crossover_signature);
  m.def("crossover_instance", &crossover_instance);
  m.def("pfaffian_crossover_instance", &pfaffian_crossover_instance,
        py::arg("graph"));
  m.def("graph_to_text", &graph_to_text, py::arg("graph"));
  m.def("graph_from_text", &graph_from_text, py::arg("text"));

  py::class_<MatchgateCheck>(m, "MatchgateCheck")
      .def_readonly("ok", &MatchgateCheck::ok)
      .def_readonly("zero", &MatchgateCheck::zero)
      .def_readonly("graph", &MatchgateCheck::graph)
      .def_readonly("log", &MatchgateCheck::log)
      .def_readonly("mismatch", &MatchgateCheck::mismatch)
      .def_readonly("expected", &MatchgateCheck::expected)
      .def_readonly("actual", &MatchgateCheck::actual)
      .def("__bool__", [](const MatchgateCheck& c) { return c.ok; })
      .def("__repr__", [](const MatchgateCheck& c) {
        return c.ok ? std::string("<MatchgateCheck ok>")
                    : "<MatchgateCheck mismatch at " +
                          std::to_string(c.mismatch) + ">";
      });

  m.def("is_matchgate", &is_matchgate, py::arg("signature"));

  py::class_<CanonicalForm>(
      m, "CanonicalForm",
      "A matching form together with the step logs that produce it: "
      "replaying row_log + col_log on the original view yields the "
      "canonical signature.")
      .def_readonly("s", &CanonicalForm::s)
      .def_readonly("t", &CanonicalForm::t)
      .def_readonly("r", &CanonicalForm::r)
      .def_readonly("zero", &CanonicalForm::zero)
      .def_readonly("weights", &CanonicalForm::weights)
      .def_readonly("row_log", &CanonicalForm::row_log)
      .def_readonly("col_log", &CanonicalForm::col_log)
      .def("__repr__", [](const CanonicalForm& c) {
        return "CanonicalForm(s=" + std::to_string(c.s) +
               ", t=" + std::to_string(c.t) + ", r=" + std::to_string(c.r) +
               ")";
      });

  // Qualified: _GNU_SOURCE math.h declares a global canonicalize().
  m.def("canonicalize", &holoalg::canonicalize, py::arg("view"));
  m.def("canonical_signature", &canonical_signature, py::arg("form"));
  m.def("reconstruct", &reconstruct, py::arg("form"));
  m.def("to_underlying_graph", &to_underlying_graph, py::arg("signature"),
        "The underlying graph of a matchgate signature and the anchoring "
        "steps applied before reading it off.");
  m.def("canonical_form_to_json", &canonical_form_to_json_text,
        py::arg("form"));
  m.def("canonical_form_from_json", &canonical_form_from_json_text,
        py::arg("text"));

  py::class_<Base>(m, "Base",
                   "A domain-changing matrix with a power-of-two column "
                   "count 2^t.")
      .def(py::init<ScalarMatrix, int>(), py::arg("m"), py::arg("t"))
      .def_readonly("m", &Base::m)
      .def_readonly("t", &Base::t)
      .def("__repr__", [](const Base& b) {
        return "Base(" + std::to_string(b.m.rows) + "x" +
               std::to_string(b.m.cols) + ", t=" + std::to_string(b.t) + ")";
      });

  py::class_<CollapseCertificate>(m, "CollapseCertificate")
      .def_readonly("col_log", &CollapseCertificate::col_log)
      .def_readonly("constants", &CollapseCertificate::constants)
      .def_readonly("row_log", &CollapseCertificate::row_log)
      .def_readonly("q", &CollapseCertificate::q)
      .def_readonly("c1", &CollapseCertificate::c1)
      .def_readonly("s_rows", &CollapseCertificate::s_rows)
      .def_readonly("t_rows", &CollapseCertificate::t_rows);

  py::class_<CollapsedProblem>(
      m, "CollapsedProblem",
      "An equivalent problem over a narrower base; empty new_left means "
      "the left side is unchanged.")
      .def_readonly("new_base", &CollapsedProblem::new_base)
      .def_readonly("new_left", &CollapsedProblem::new_left)
      .def_readonly("new_right", &CollapsedProblem::new_right)
      .def_readonly("certificate", &CollapsedProblem::certificate)
      .def_readonly("r", &CollapsedProblem::r)
      .def("__repr__", [](const CollapsedProblem& c) {
        return "CollapsedProblem(r=" + std::to_string(c.r) + ")";
      });

  m.def("strip_columns", &strip_columns, py::arg("base"), py::arg("right"),
        py::arg("constants"));
  m.def("collapse_via_realizer", &collapse_via_realizer, py::arg("base"),
        py::arg("realizer"), py::arg("left"), py::arg("right"));
  m.def("collapse_via_cover", &collapse_via_cover, py::arg("base"),
        py::arg("p"), py::arg("q"), py::arg("left"), py::arg("right"));
  m.def("collapse_symmetric", &collapse_symmetric, py::arg("f"),
        py::arg("base"), py::arg("right"));
  m.def(
      "verify_collapse",
      [](const Base& base, const std::vector<Signature>& fs,
         const std::vector<Signature>& hs, const CollapsedProblem& collapsed,
         int trials, std::uint64_t seed) {
        std::ostringstream log;
        bool ok = verify_collapse(base, fs, hs, collapsed, trials, seed, &log);
        return py::make_tuple(ok, log.str());
      },
      py::arg("base"), py::arg("left"), py::arg("right"), py::arg("collapsed"),
      py::arg("trials"), py::arg("seed"),
      "Compares the original and collapsed problems on random closed "
      "instances; returns (ok, log).");
  m.def("collapsed_problem_to_json", &collapsed_problem_to_json_text,
        py::arg("collapsed"));
  m.def("collapsed_problem_from_json", &collapsed_problem_from_json_text,
        py::arg("text"));
}
