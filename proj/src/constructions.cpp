#include "lrc/constructions.hpp"

#include <numeric>

#include "lrc/bounds.hpp"
#include "lrc/rng.hpp"

namespace lrc {

std::vector<Elem> evaluation_points(std::size_t n, const Field& f) {
    if (n >= f.order()) {
        fail(ErrorCode::FieldTooSmall, "need q > n for " + std::to_string(n) + " distinct nonzero points, got " + f.name());
    }
    std::vector<Elem> pts(n);
    if (f.is_prime()) {
        std::iota(pts.begin(), pts.end(), Elem{1});
    } else {
        Elem x = 1;
        for (auto& p : pts) {
            p = x;
            x = f.mul(x, f.primitive_element());
        }
    }
    return pts;
}

Matrix vandermonde(const std::vector<Elem>& points, std::size_t rows, const Field& f) {
    Matrix v(rows, points.size());
    for (std::size_t j = 0; j < points.size(); ++j) {
        Elem x = 1;
        for (std::size_t i = 0; i < rows; ++i) {
            v(i, j) = x;
            x = f.mul(x, points[j]);
        }
    }
    return v;
}

LinearCode rs_code(std::size_t n, std::size_t k, const Field& f) {
    if (k < 1 || k > n) fail(ErrorCode::InvalidParams, "need 1 <= k <= n");
    const auto pts = evaluation_points(n, f);
    Coords sys(k);
    std::iota(sys.begin(), sys.end(), 0);
    if (k == n) return LinearCode::from_generator(Matrix::identity(n), f, sys);
    const Matrix h = vandermonde(pts, n - k, f);
    Matrix g = row_basis(null_space_basis(h, f), f);
    return LinearCode::from_generator(std::move(g), f, sys);
}

namespace {

void require_delta(std::size_t r, std::size_t delta, std::size_t k) {
    if (delta < 2) fail(ErrorCode::InvalidParams, "need delta >= 2");
    if (r < 1 || k < 1) fail(ErrorCode::InvalidParams, "need r >= 1 and k >= 1");
}

std::size_t blocks_for(std::size_t k, std::size_t r) { return (k + r - 1) / r; }

}  // namespace

Construction pyramid_code(std::size_t k, std::size_t r, std::size_t delta, std::size_t d, const Field& f) {
    require_delta(r, delta, k);
    if (r > k) fail(ErrorCode::InvalidParams, "need r <= k");
    if (delta > d) fail(ErrorCode::DeltaExceedsD, "need delta <= d");
    const LinearCode base = rs_code(k + d - 1, k, f);
    const Matrix& gb = base.generator();

    const std::size_t groups = blocks_for(k, r);
    const std::size_t split = delta - 1;
    const std::size_t n = k + groups * split + (d - delta);
    Matrix g(k, n);
    std::vector<Coords> partition(groups);
    Coords global;
    for (std::size_t j = 0; j < d - delta; ++j) global.push_back(k + groups * split + j);

    for (std::size_t row = 0; row < k; ++row) {
        const std::size_t b = row / r;
        g(row, row) = 1;
        for (std::size_t j = 0; j < split; ++j) g(row, k + b * split + j) = gb(row, k + j);
        for (std::size_t j = 0; j < d - delta; ++j) g(row, global[j]) = gb(row, k + split + j);
    }
    for (std::size_t b = 0; b < groups; ++b) {
        for (std::size_t row = b * r; row < std::min(k, (b + 1) * r); ++row) partition[b].push_back(row);
        for (std::size_t j = 0; j < split; ++j) partition[b].push_back(k + b * split + j);
    }

    Coords sys(k);
    std::iota(sys.begin(), sys.end(), 0);
    LinearCode code = LinearCode::from_generator(std::move(g), f, sys);

    LocalityProfile prof{r, delta, LocalityMode::information, {}};
    for (const auto& s : partition) {
        prof.groups.push_back({s.front(), s, null_space_basis(code.generator().select_columns(s), f)});
    }

    ConstructionRecipe rec;
    rec.kind = "pyramid";
    rec.params = {{"k", static_cast<std::int64_t>(k)},     {"r", static_cast<std::int64_t>(r)},
                  {"delta", static_cast<std::int64_t>(delta)}, {"d", static_cast<std::int64_t>(d)},
                  {"n", static_cast<std::int64_t>(n)}};
    rec.q = f.order();
    rec.modulus = f.modulus();
    rec.evaluation_points = evaluation_points(k + d - 1, f);
    rec.partition = partition;
    rec.global_parity_columns = global;
    return {std::move(code), std::move(prof), std::move(rec)};
}

Matrix parity_split_check_matrix(std::size_t k, std::size_t r, std::size_t delta, const Field& f) {
    require_delta(r, delta, k);
    const std::size_t groups = blocks_for(k, r);
    const std::size_t width = r + delta - 1;
    const std::size_t n = groups * width;
    const std::size_t k_rs = k + (groups - 1) * (delta - 1);
    const std::size_t d = n - k_rs + 1;
    if (delta > d) fail(ErrorCode::InfeasibleDelta, "delta exceeds the implied distance " + std::to_string(d));
    const Matrix hrs = vandermonde(evaluation_points(n, f), n - k_rs, f);

    Matrix h(0, n);
    for (std::size_t b = 0; b < groups; ++b) {
        for (std::size_t i = 0; i < delta - 1; ++i) {
            Vector row(n, 0);
            for (std::size_t j = b * width; j < (b + 1) * width; ++j) row[j] = hrs(i, j);
            h.append_row(row);
        }
    }
    for (std::size_t i = delta - 1; i < hrs.rows(); ++i) h.append_row(hrs.row(i));
    return h;
}

Construction parity_split_code(std::size_t k, std::size_t r, std::size_t delta, const Field& f) {
    const Matrix h = parity_split_check_matrix(k, r, delta, f);
    const std::size_t n = h.cols();
    const std::size_t groups = blocks_for(k, r);
    const std::size_t width = r + delta - 1;
    if (rank(h, f) != n - k) fail(ErrorCode::InvalidParams, "split check matrix does not have rank n - k");

    auto e = rref(null_space_basis(h, f), f);
    LinearCode code = LinearCode::from_generator(std::move(e.reduced), f, e.pivots);

    std::vector<Coords> partition(groups);
    LocalityProfile prof{r, delta, LocalityMode::all_symbol, {}};
    for (std::size_t b = 0; b < groups; ++b) {
        Coords s(width);
        std::iota(s.begin(), s.end(), b * width);
        Coords rows(delta - 1);
        std::iota(rows.begin(), rows.end(), b * (delta - 1));
        prof.groups.push_back({s.front(), s, h.select_rows(rows).select_columns(s)});
        partition[b] = s;
    }

    ConstructionRecipe rec;
    rec.kind = "parity_split";
    rec.params = {{"k", static_cast<std::int64_t>(k)},
                  {"r", static_cast<std::int64_t>(r)},
                  {"delta", static_cast<std::int64_t>(delta)},
                  {"n", static_cast<std::int64_t>(n)},
                  {"k_rs", static_cast<std::int64_t>(k + (groups - 1) * (delta - 1))}};
    rec.q = f.order();
    rec.modulus = f.modulus();
    rec.evaluation_points = evaluation_points(n, f);
    rec.partition = partition;
    if (k % r == 0) rec.global_parity_columns = Coords{};
    return {std::move(code), std::move(prof), std::move(rec)};
}

Construction random_all_symbol_code(std::size_t k, std::size_t r, std::size_t delta, std::size_t t, const Field& f,
                                    std::uint64_t seed, std::size_t attempts) {
    require_delta(r, delta, k);
    if (t < 1) fail(ErrorCode::InvalidParams, "need t >= 1");
    const std::size_t width = r + delta - 1;
    const std::size_t n = t * width;
    if (k > n - t * (delta - 1)) {
        fail(ErrorCode::InfeasibleParams, "need k <= n - t(delta - 1) = " + std::to_string(n - t * (delta - 1)));
    }
    const Matrix local = vandermonde(evaluation_points(width, f), delta - 1, f);
    std::vector<Coords> partition(t);
    for (std::size_t b = 0; b < t; ++b) {
        partition[b].resize(width);
        std::iota(partition[b].begin(), partition[b].end(), b * width);
    }
    const Matrix l = block_diagonal(std::vector<Matrix>(t, local), partition, n);
    const Matrix complement_basis = null_space_basis(l, f);

    std::uint64_t last_failures = 0;
    for (std::size_t a = 0; a < attempts; ++a) {
        Pcg32 rng(seed + a);
        Matrix coeffs(k, complement_basis.rows());
        for (std::size_t i = 0; i < coeffs.rows(); ++i)
            for (std::size_t j = 0; j < coeffs.cols(); ++j) coeffs(i, j) = rng.below(f.order());
        Matrix g = multiply(coeffs, complement_basis, f);
        if (rank(g, f) < k) {
            last_failures = count_k_cores(partition, r, k);
            continue;
        }
        const auto gp = check_general_position(g, l, partition, r, k, f);
        if (gp.status != PositionStatus::pass) {
            last_failures = gp.failed_cores;
            continue;
        }

        auto e = rref(g, f);
        LinearCode code = LinearCode::from_generator(std::move(e.reduced), f, e.pivots);
        LocalityProfile prof{r, delta, LocalityMode::all_symbol, {}};
        for (const auto& s : partition) prof.groups.push_back({s.front(), s, local});

        ConstructionRecipe rec;
        rec.kind = "random_general_position";
        rec.params = {{"k", static_cast<std::int64_t>(k)},
                      {"r", static_cast<std::int64_t>(r)},
                      {"delta", static_cast<std::int64_t>(delta)},
                      {"t", static_cast<std::int64_t>(t)},
                      {"n", static_cast<std::int64_t>(n)},
                      {"seed", static_cast<std::int64_t>(seed)},
                      {"attempts", static_cast<std::int64_t>(attempts)}};
        rec.q = f.order();
        rec.modulus = f.modulus();
        rec.evaluation_points = evaluation_points(width, f);
        rec.partition = partition;
        rec.attempt_used = static_cast<std::int64_t>(a);
        return {std::move(code), std::move(prof), std::move(rec)};
    }
    throw RandomConstructionFailure("no attempt out of " + std::to_string(attempts) +
                                        " reached general position; last attempt had " +
                                        std::to_string(last_failures) + " failing k-cores",
                                    last_failures);
}

namespace {

/// Coordinates of an outer symbol over the inner field.
Vector embed_symbol(Elem x, std::size_t k1) {
    if (k1 == 1) return {x};
    Vector out(k1);
    for (std::size_t b = 0; b < k1; ++b) out[b] = (x >> b) & 1u;
    return out;
}

}  // namespace

Construction concatenate(const LinearCode& outer, const LinearCode& inner) {
    const Field& fi = inner.field();
    const Field& fo = outer.field();
    const std::size_t k1 = inner.k();
    const std::size_t n1 = inner.n();
    const std::size_t k2 = outer.k();
    const std::size_t n2 = outer.n();
    if (k1 == 0 || k2 == 0) fail(ErrorCode::InvalidParams, "component codes must be nonzero");
    if (k1 == 1) {
        if (fi != fo) fail(ErrorCode::FieldMismatch, "with k1 = 1 the inner and outer fields must agree");
    } else if (fi.order() != 2 || fo.characteristic() != 2 || fo.degree() != static_cast<int>(k1)) {
        fail(ErrorCode::FieldMismatch, "outer field must be GF(2^k1) over an inner GF(2); got inner " + fi.name() +
                                           ", outer " + fo.name() + ", k1 = " + std::to_string(k1));
    }

    Matrix g(0, n1 * n2);
    for (std::size_t a = 0; a < k2; ++a) {
        for (std::size_t b = 0; b < k1; ++b) {
            const Elem scale = k1 == 1 ? Elem{1} : Elem{1} << b;
            Vector row(n1 * n2, 0);
            for (std::size_t p = 0; p < n2; ++p) {
                const Vector sym = embed_symbol(fo.mul(scale, outer.generator()(a, p)), k1);
                const Vector block = inner.encode(sym);
                std::copy(block.begin(), block.end(), row.begin() + static_cast<std::ptrdiff_t>(p * n1));
            }
            g.append_row(row);
        }
    }
    LinearCode code = LinearCode::from_generator(std::move(g), fi);

    std::vector<Coords> partition(n2);
    for (std::size_t p = 0; p < n2; ++p) {
        partition[p].resize(n1);
        std::iota(partition[p].begin(), partition[p].end(), p * n1);
    }
    std::optional<LocalityProfile> prof;
    const std::size_t d1 = min_distance(inner);
    if (d1 >= 2 && d1 <= n1) {
        LocalityProfile pr{n1 - d1 + 1, d1, LocalityMode::all_symbol, {}};
        const Matrix h = inner.check_matrix();
        for (const auto& s : partition) pr.groups.push_back({s.front(), s, h});
        prof = std::move(pr);
    }

    ConstructionRecipe rec;
    rec.kind = "concatenated";
    rec.params = {{"n1", static_cast<std::int64_t>(n1)},
                  {"k1", static_cast<std::int64_t>(k1)},
                  {"d1", static_cast<std::int64_t>(d1)},
                  {"n2", static_cast<std::int64_t>(n2)},
                  {"k2", static_cast<std::int64_t>(k2)}};
    rec.q = fi.order();
    rec.modulus = fi.modulus();
    rec.partition = partition;
    rec.inner = ConstructionRecipe::Component{fi.order(), fi.modulus(), inner.generator()};
    rec.outer = ConstructionRecipe::Component{fo.order(), fo.modulus(), outer.generator()};
    return {std::move(code), std::move(prof), std::move(rec)};
}

Construction replay(const ConstructionRecipe& rec) {
    auto param = [&](const char* key) -> std::size_t {
        auto it = rec.params.find(key);
        if (it == rec.params.end() || it->second < 0) fail(ErrorCode::ParseError, std::string("recipe lacks ") + key);
        return static_cast<std::size_t>(it->second);
    };
    const Field f = Field::make(rec.q, rec.modulus);
    if (rec.kind == "rs") {
        LinearCode c = rs_code(param("n"), param("k"), f);
        return {std::move(c), std::nullopt, rec};
    }
    if (rec.kind == "pyramid") return pyramid_code(param("k"), param("r"), param("delta"), param("d"), f);
    if (rec.kind == "parity_split") return parity_split_code(param("k"), param("r"), param("delta"), f);
    if (rec.kind == "random_general_position") {
        return random_all_symbol_code(param("k"), param("r"), param("delta"), param("t"), f, param("seed"),
                                      param("attempts"));
    }
    if (rec.kind == "concatenated") {
        if (!rec.inner || !rec.outer) fail(ErrorCode::ParseError, "concatenation recipe lacks its components");
        const Field fi = Field::make(rec.inner->q, rec.inner->modulus);
        const Field fo = Field::make(rec.outer->q, rec.outer->modulus);
        return concatenate(LinearCode::from_generator(rec.outer->generator, fo),
                           LinearCode::from_generator(rec.inner->generator, fi));
    }
    fail(ErrorCode::ParseError, "unknown recipe kind '" + rec.kind + "'");
}

}  // namespace lrc
