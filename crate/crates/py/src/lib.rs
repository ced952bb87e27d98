//! Python bindings: exact q-numbers, elements of A(SU_q(3)) and A(S^5_q),
//! the Haar state, section dimensions and the acceptance battery.

use pyo3::prelude::*;

#[pymodule]
mod cp2q {
    use ::cp2q::expr::{parse_poly, parse_uq};
    use ::cp2q::haar;
    use ::cp2q::holo;
    use ::cp2q::ncpoly::NCPoly;
    use ::cp2q::qalgebras::{act_left, act_right, actions::act_left_s5, embed_s5, Alg, Presentation};
    use ::cp2q::qcoeff::{self, RatV};
    use ::cp2q::report::SuiteReport;
    use ::cp2q::suite::{self, Level};
    use pyo3::exceptions::{PyArithmeticError, PyValueError};
    use pyo3::prelude::*;
    use pyo3::types::PyAny;

    fn value_err(e: impl std::fmt::Display) -> PyErr {
        PyValueError::new_err(e.to_string())
    }

    fn alg_of(name: &str) -> PyResult<Alg> {
        match name {
            "s5q" => Ok(Alg::S5q),
            "suq3" => Ok(Alg::Suq3),
            _ => Err(PyValueError::new_err(format!("unknown algebra `{name}`; use `s5q` or `suq3`"))),
        }
    }

    fn report_to_py<'py>(py: Python<'py>, r: &SuiteReport) -> PyResult<Bound<'py, PyAny>> {
        py.import("json")?.call_method1("loads", (r.body_json(),))
    }

    /// An exact element of Q(q^(1/4)).
    #[pyclass(frozen, eq, skip_from_py_object, module = "cp2q")]
    #[derive(Clone, PartialEq)]
    pub struct QNumber(RatV);

    #[pymethods]
    impl QNumber {
        /// `q^k`, with `k` a multiple of 1/4 given as `quarters / 4`.
        #[staticmethod]
        fn v_pow(quarters: i32) -> Self {
            QNumber(RatV::v_pow(quarters))
        }

        #[staticmethod]
        fn integer(n: i64) -> Self {
            QNumber(RatV::from_int(n))
        }

        /// Numeric value at `q = q0`.
        fn eval(&self, q0: f64) -> f64 {
            self.0.eval_f64(q0)
        }

        fn is_zero(&self) -> bool {
            self.0.is_zero()
        }

        fn __add__(&self, o: &QNumber) -> Self {
            QNumber(&self.0 + &o.0)
        }

        fn __sub__(&self, o: &QNumber) -> Self {
            QNumber(&self.0 - &o.0)
        }

        fn __mul__(&self, o: &QNumber) -> Self {
            QNumber(&self.0 * &o.0)
        }

        fn __truediv__(&self, o: &QNumber) -> PyResult<Self> {
            if o.0.is_zero() {
                return Err(PyArithmeticError::new_err("division by zero"));
            }
            Ok(QNumber(&self.0 / &o.0))
        }

        fn __str__(&self) -> String {
            self.0.to_string()
        }

        fn __repr__(&self) -> String {
            format!("QNumber({})", self.0)
        }
    }

    /// `[n]_q`.
    #[pyfunction]
    fn q_int(n: i64) -> QNumber {
        QNumber(qcoeff::q_int(n))
    }

    /// `[n]_q!`.
    #[pyfunction]
    fn q_factorial(n: i64) -> PyResult<QNumber> {
        qcoeff::q_factorial(n).map(QNumber).map_err(value_err)
    }

    #[pyfunction]
    fn q_binomial(n: i64, m: i64) -> PyResult<QNumber> {
        qcoeff::q_binomial(n, m).map(QNumber).map_err(value_err)
    }

    /// `[j+k+l]! / ([j]! [k]! [l]!)` in the symmetric normalization.
    #[pyfunction]
    fn q_trinomial(j: i64, k: i64, l: i64) -> PyResult<QNumber> {
        qcoeff::q_trinomial(j, k, l).map(QNumber).map_err(value_err)
    }

    /// An element of A(SU_q(3)) (`suq3`) or A(S^5_q) (`s5q`) in normal form.
    #[pyclass(frozen, eq, skip_from_py_object, module = "cp2q")]
    #[derive(Clone, PartialEq)]
    pub struct Element {
        alg: Alg,
        poly: NCPoly<RatV>,
    }

    impl Element {
        fn pres(&self) -> &'static Presentation {
            Presentation::get(self.alg)
        }

        fn same(&self, o: &Element) -> PyResult<()> {
            if self.alg != o.alg {
                return Err(PyValueError::new_err("elements live in different algebras"));
            }
            Ok(())
        }
    }

    #[pymethods]
    impl Element {
        #[new]
        fn new(alg: &str, expr: &str) -> PyResult<Self> {
            let alg = alg_of(alg)?;
            let poly = parse_poly(Presentation::get(alg), expr).map_err(value_err)?;
            Ok(Element { alg, poly })
        }

        #[getter]
        fn algebra(&self) -> &'static str {
            self.alg.name()
        }

        fn is_zero(&self) -> bool {
            self.poly.is_zero()
        }

        fn __add__(&self, o: &Element) -> PyResult<Self> {
            self.same(o)?;
            Ok(Element { alg: self.alg, poly: self.poly.add(&o.poly) })
        }

        fn __sub__(&self, o: &Element) -> PyResult<Self> {
            self.same(o)?;
            Ok(Element { alg: self.alg, poly: self.poly.sub(&o.poly) })
        }

        fn __mul__(&self, o: &Element) -> PyResult<Self> {
            self.same(o)?;
            Ok(Element { alg: self.alg, poly: self.pres().mul(&self.poly, &o.poly) })
        }

        fn scale(&self, c: &QNumber) -> Self {
            Element { alg: self.alg, poly: self.poly.scale(&c.0) }
        }

        fn star(&self) -> Self {
            Element { alg: self.alg, poly: self.pres().star(&self.poly) }
        }

        /// `h |> x`.
        fn act_left(&self, h: &str) -> PyResult<Self> {
            let h = parse_uq(h).map_err(value_err)?;
            let poly = match self.alg {
                Alg::S5q => act_left_s5(&h, &self.poly),
                Alg::Suq3 => act_left(&h, &self.poly),
            };
            Ok(Element { alg: self.alg, poly })
        }

        /// `x <| h`; S^5_q elements are embedded into A(SU_q(3)) first.
        fn act_right(&self, h: &str) -> PyResult<Self> {
            let h = parse_uq(h).map_err(value_err)?;
            Ok(Element { alg: Alg::Suq3, poly: act_right(&self.embedded().poly, &h) })
        }

        /// The image in A(SU_q(3)).
        fn embedded(&self) -> Self {
            match self.alg {
                Alg::S5q => Element { alg: Alg::Suq3, poly: embed_s5(&self.poly) },
                Alg::Suq3 => self.clone(),
            }
        }

        /// The modular automorphism of the Haar state.
        fn sigma(&self) -> PyResult<Self> {
            match self.alg {
                Alg::S5q => Ok(Element { alg: self.alg, poly: haar::sigma(&self.poly) }),
                Alg::Suq3 => Ok(Element { alg: self.alg, poly: haar::sigma_suq3(&self.poly) }),
            }
        }

        /// The Haar state (S^5_q only), solved on the smallest slice that
        /// contains the element.
        fn haar(&self) -> PyResult<QNumber> {
            if self.alg != Alg::S5q {
                return Err(PyValueError::new_err("the Haar state is implemented on s5q"));
            }
            haar::haar_state(&self.poly, haar::slice_of(&self.poly)).map(QNumber).map_err(value_err)
        }

        fn __str__(&self) -> String {
            self.pres().display(&self.poly)
        }

        fn __repr__(&self) -> String {
            format!("Element({:?}, {:?})", self.alg.name(), self.pres().display(&self.poly))
        }
    }

    /// Normal form of `expr` in the named algebra, as a string.
    #[pyfunction]
    fn reduce(alg: &str, expr: &str) -> PyResult<String> {
        Ok(Element::new(alg, expr)?.__str__())
    }

    /// `(dimension, expected)` for the holomorphic sections of L_N found on
    /// the slice of total degree `degree`.
    #[pyfunction]
    fn h0_dimension(n: i64, degree: usize) -> PyResult<(usize, usize)> {
        let c = holo::h0_solve(n, degree).map_err(value_err)?.certificate();
        Ok((c.dimension, c.expected))
    }

    /// Frame identities and flatness for `Psi_N`, as `{name: passed}`.
    #[pyfunction]
    fn frame_verify(n: i64) -> PyResult<Vec<(String, bool)>> {
        let mut cs = holo::verify_frame_identities(n).map_err(value_err)?;
        cs.extend(holo::flatness_check(n).map_err(value_err)?);
        Ok(cs.into_iter().map(|c| (c.name, c.pass)).collect())
    }

    /// One criterion (1..13) or `"all"`, as a report dictionary.
    #[pyfunction]
    #[pyo3(signature = (which, level = "smoke"))]
    fn run_suite<'py>(py: Python<'py>, which: &str, level: &str) -> PyResult<Bound<'py, PyAny>> {
        let level = Level::parse(level).ok_or_else(|| PyValueError::new_err(format!("unknown level `{level}`")))?;
        let report = if which == "all" {
            py.detach(|| suite::run_all(level).0)
        } else {
            let k: usize = which.parse().map_err(value_err)?;
            py.detach(|| suite::run_criterion(k, level)).ok_or_else(|| PyValueError::new_err(format!("no criterion {k}")))?
        };
        report_to_py(py, &report)
    }
}
