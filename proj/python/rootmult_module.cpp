#include "rootmult/multiplicity.hpp"
#include "rootmult/number_theory.hpp"
#include "rootmult/sampler.hpp"
#include "rootmult/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace rootmult;

namespace {

py::int_ to_py(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::object to_py(const ExactScalar& v) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(v.numerator()), to_py(v.denominator()));
}

Partition partition_from(const std::vector<int>& parts) { return Partition(parts); }

MomentSpec spec_from(const std::vector<std::pair<long long, long long>>& terms) {
    std::vector<MomentTerm> t;
    t.reserve(terms.size());
    for (auto [k, m] : terms) t.push_back({k, m});
    return MomentSpec(std::move(t));
}

}  // namespace

PYBIND11_MODULE(rootmult, m) {
    m.doc() = "exact multiplicities of symmetric-group characters in q-th root counting functions";

    m.def("partitions_of", [](long long n) {
        std::vector<std::vector<int>> out;
        for (const Partition& p : partitions_of(n)) out.push_back(p.parts());
        return out;
    }, py::arg("n"), "all partitions of n in decreasing lexicographic order");

    m.def("class_size", [](const std::vector<int>& cycle_type) {
        return to_py(class_data(partition_from(cycle_type)).class_size);
    }, py::arg("cycle_type"));

    m.def("centralizer_order", [](const std::vector<int>& cycle_type) {
        return to_py(class_data(partition_from(cycle_type)).centralizer_order);
    }, py::arg("cycle_type"));

    m.def("divisors", [](long long q) { return divisors(q); }, py::arg("q"));
    m.def("divisor_sigma", [](long long alpha, long long q) { return to_py(divisor_sigma(alpha, q)); },
          py::arg("alpha"), py::arg("q"));
    m.def("odd_divisor_count", [](long long q) { return to_py(odd_divisor_count(q)); }, py::arg("q"));
    m.def("stirling1", [](long long n, long long k) { return to_py(stirling1(n, k)); }, py::arg("n"), py::arg("k"));
    m.def("stirling2", [](long long n, long long k) { return to_py(stirling2(n, k)); }, py::arg("n"), py::arg("k"));
    m.def("harmonic", [](long long r) { return to_py(harmonic(r)); }, py::arg("r"));

    m.def("mn_character", [](const std::vector<int>& lambda, const std::vector<int>& rho) {
        return to_py(mn_character(partition_from(lambda), partition_from(rho)));
    }, py::arg("lam"), py::arg("rho"), "irreducible character chi_lambda at the class of cycle type rho");

    m.def("dimension", [](const std::vector<int>& mu) { return to_py(dimension(partition_from(mu))); },
          py::arg("mu"));

    m.def("power_cycle_type", [](const std::vector<int>& cycle_type, long long q) {
        return power_cycle_type(CycleType::from_partition(partition_from(cycle_type)), q).to_partition().parts();
    }, py::arg("cycle_type"), py::arg("q"), "cycle type of pi^q");

    m.def("power_moment", [](const std::vector<std::pair<long long, long long>>& spec, long long n) {
        return to_py(power_moment(spec_from(spec), n));
    }, py::arg("spec"), py::arg("n"), "mean of prod c_k^m over uniform S_n, exact");

    m.def("root_count_power_moment", [](long long delta, long long q, long long n) {
        return to_py(root_count_power_moment(delta, q, n));
    }, py::arg("delta"), py::arg("q"), py::arg("n"), "mean of c_1(pi^q)^delta over uniform S_n, exact");

    m.def("multiplicity", [](const std::vector<int>& lambda, long long q, const std::string& method) {
        Partition lam = partition_from(lambda);
        if (method == "brute") return to_py(multiplicity_brute(lam, q).value);
        if (method == "closed_form") return to_py(multiplicity_closed_form(lam, q).value);
        throw std::invalid_argument("method must be brute or closed_form");
    }, py::arg("lam"), py::arg("q"), py::arg("method") = "closed_form",
       "exact multiplicity of chi_lambda in the q-th root counting class function");

    m.def("multiplicity_mu", [](const std::vector<int>& mu, long long n, long long q) {
        return to_py(multiplicity_closed_form(partition_from(mu), n, q).value);
    }, py::arg("mu"), py::arg("n"), py::arg("q"),
       "closed form for lambda = (n-|mu|, mu); n may exceed the partition part limit");

    m.def("multiplicity_asymptotic", [](const std::vector<int>& mu, long long q) {
        AsymptoticEstimate est = multiplicity_asymptotic(partition_from(mu), q);
        return py::make_tuple(to_py(est.main_term), to_py(est.error_scale));
    }, py::arg("mu"), py::arg("q"), "(main term, error scale) for lambda = (n-|mu|, mu)");

    m.def("error_term_bound", [](const std::vector<int>& mu, long long q, long long n) {
        return to_py(error_term_bound(partition_from(mu), q, n));
    }, py::arg("mu"), py::arg("q"), py::arg("n"),
       "exact averaged binomial error aggregate for the main-term comparison");

    m.def("empirical_moment", [](const std::vector<std::pair<long long, long long>>& spec, long long n,
                                 long long q, long long trials, std::uint64_t seed) {
        SampleReport r = empirical_moment(spec_from(spec), n, q, trials, seed);
        py::dict out;
        out["estimate"] = r.estimate;
        out["standard_error"] = r.standard_error;
        out["trials"] = r.trials;
        out["seed"] = r.seed;
        return out;
    }, py::arg("spec"), py::arg("n"), py::arg("q"), py::arg("trials") = 100000, py::arg("seed") = 0,
       "deterministic Monte Carlo estimate of the same moment");

    m.def("verify", [](const std::string& suite, double threshold) {
        SuiteResult r = run_suite(suite, threshold, 0);
        py::dict out;
        out["suite"] = r.suite;
        out["checks"] = r.checks;
        out["failures"] = r.failures;
        out["worst_constant"] = r.worst_constant;
        out["notes"] = r.notes;
        return out;
    }, py::arg("suite"), py::arg("threshold") = 10.0);
}
