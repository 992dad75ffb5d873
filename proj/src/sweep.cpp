// Axiom and shift-law sweeps. The serial versions are the reference; the
// OpenMP versions must produce the same SweepResult for any thread count.
#include <exception>

#include <omp.h>

#include "wittmod/exprio.hpp"
#include "wittmod/verify.hpp"

namespace wittmod::kernels {

namespace {

struct RowResult {
  std::uint64_t checked = 0;
  std::optional<Counterexample> failure;
};

AlgElement single(const ModuleModel& model, const WittTerm& t) {
  return AlgElement::basis(model.spec.algebra(), model.spec.rank(), t);
}

// images[x * F + f] = x . fs[f]
Poly image_of(const ModuleModel& model, std::span<const WittTerm> terms, std::span<const Poly> fs, std::size_t idx) {
  return model.act(terms[idx / fs.size()], fs[idx % fs.size()]);
}

RowResult axiom_row(const ModuleModel& model, std::span<const WittTerm> terms, std::span<const Poly> fs,
                    const std::vector<Poly>& images, std::size_t xi) {
  RowResult row;
  const std::size_t nf = fs.size();
  const WittTerm& x = terms[xi];
  for (std::size_t yi = 0; yi < terms.size(); ++yi) {
    const WittTerm& y = terms[yi];
    const AlgElement xy = model.bracket(x, y);
    for (std::size_t fi = 0; fi < nf; ++fi) {
      ++row.checked;
      if (row.failure) continue;
      Poly lhs = model.act_element(xy, fs[fi]);
      Poly rhs = model.act(x, images[yi * nf + fi]) - model.act(y, images[xi * nf + fi]);
      if (!(lhs == rhs)) {
        row.failure = Counterexample{print_element(single(model, x)), print_element(single(model, y)),
                                     print_poly(fs[fi]), print_poly(lhs), print_poly(rhs)};
      }
    }
  }
  return row;
}

RowResult shift_row(const ModuleModel& model, std::span<const Poly> fs, const WittTerm& t) {
  RowResult row;
  if (t.is_central()) return row;
  const VarContext ctx = model.spec.context();
  const Poly one = Poly::constant(ctx, 1);
  const Poly generator = model.act(t, one);
  const std::string name = print_element(single(model, t));
  ++row.checked;
  if (generator.is_zero()) {
    row.failure = Counterexample{name, "", "1", "0", "0"};
    return row;
  }
  for (const Poly& f : fs) {
    ++row.checked;
    if (row.failure) continue;
    Poly lhs = model.act(t, f);
    Poly rhs = shift_sub(f, t.exponents()) * generator;
    if (!(lhs == rhs)) row.failure = Counterexample{name, "", print_poly(f), print_poly(lhs), print_poly(rhs)};
  }
  return row;
}

SweepResult merge(const std::vector<RowResult>& rows) {
  SweepResult out;
  for (const auto& r : rows) {
    out.checked += r.checked;
    if (!out.first_failure && r.failure) out.first_failure = r.failure;
  }
  return out;
}

void rethrow_first(const std::vector<std::exception_ptr>& errors) {
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

SweepResult axiom_sweep_serial(const ModuleModel& model, std::span<const WittTerm> terms, std::span<const Poly> fs) {
  std::vector<Poly> images;
  images.reserve(terms.size() * fs.size());
  for (std::size_t i = 0; i < terms.size() * fs.size(); ++i) images.push_back(image_of(model, terms, fs, i));
  std::vector<RowResult> rows;
  rows.reserve(terms.size());
  for (std::size_t xi = 0; xi < terms.size(); ++xi) rows.push_back(axiom_row(model, terms, fs, images, xi));
  return merge(rows);
}

SweepResult axiom_sweep_parallel(const ModuleModel& model, std::span<const WittTerm> terms,
                                 std::span<const Poly> fs, int jobs) {
  const auto n_images = static_cast<std::int64_t>(terms.size() * fs.size());
  const auto n_rows = static_cast<std::int64_t>(terms.size());
  std::vector<Poly> images(static_cast<std::size_t>(n_images), Poly(model.spec.context()));
  std::vector<RowResult> rows(terms.size());
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n_images + n_rows));

#pragma omp parallel num_threads(jobs)
  {
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < n_images; ++i) {
      try {
        images[static_cast<std::size_t>(i)] = image_of(model, terms, fs, static_cast<std::size_t>(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
    // implicit barrier: every image exists before rows read them
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t xi = 0; xi < n_rows; ++xi) {
      try {
        rows[static_cast<std::size_t>(xi)] = axiom_row(model, terms, fs, images, static_cast<std::size_t>(xi));
      } catch (...) {
        errors[static_cast<std::size_t>(n_images + xi)] = std::current_exception();
      }
    }
  }
  rethrow_first(errors);
  return merge(rows);
}

SweepResult shift_sweep_serial(const ModuleModel& model, std::span<const WittTerm> terms, std::span<const Poly> fs) {
  std::vector<RowResult> rows;
  rows.reserve(terms.size());
  for (const auto& t : terms) rows.push_back(shift_row(model, fs, t));
  return merge(rows);
}

SweepResult shift_sweep_parallel(const ModuleModel& model, std::span<const WittTerm> terms,
                                 std::span<const Poly> fs, int jobs) {
  const auto n = static_cast<std::int64_t>(terms.size());
  std::vector<RowResult> rows(terms.size());
  std::vector<std::exception_ptr> errors(terms.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      rows[static_cast<std::size_t>(i)] = shift_row(model, fs, terms[static_cast<std::size_t>(i)]);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  rethrow_first(errors);
  return merge(rows);
}

}  // namespace wittmod::kernels
