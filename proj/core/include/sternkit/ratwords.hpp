#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sternkit/error.hpp"
#include "sternkit/polynomial.hpp"
#include "sternkit/ring.hpp"

namespace sternkit {

/// Row-major dense square or rectangular matrix over an exact ring.
template <ExactRing R>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, ring_traits<R>::zero()) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = ring_traits<R>::one();
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend Matrix operator+(Matrix a, const Matrix& b) {
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<R> data_;
};

/// Realization (init, one transition matrix per letter, final) of a rational
/// series in k non-commuting variables. The value on a word x_{a1}...x_{am} is
/// init * T(a1) * ... * T(am) * final.
template <ExactRing R>
class LinearRepresentation {
public:
    LinearRepresentation(std::vector<R> init, std::vector<Matrix<R>> trans, std::vector<R> final)
        : init_(std::move(init)), trans_(std::move(trans)), final_(std::move(final)) {
        const std::size_t m = init_.size();
        if (final_.size() != m) throw PreconditionError("initial and final vectors differ in length");
        if (trans_.empty()) throw PreconditionError("representation needs a non-empty alphabet");
        for (const auto& t : trans_) {
            if (t.rows() != m || t.cols() != m) throw PreconditionError("transition matrix has wrong shape");
        }
    }

    std::size_t states() const noexcept { return init_.size(); }
    std::size_t alphabet() const noexcept { return trans_.size(); }
    const std::vector<R>& init() const noexcept { return init_; }
    const std::vector<Matrix<R>>& transitions() const noexcept { return trans_; }
    const std::vector<R>& final() const noexcept { return final_; }

    R evaluate(std::span<const unsigned> word) const {
        std::vector<R> row = init_;
        const std::size_t m = states();
        for (unsigned letter : word) {
            if (letter >= alphabet()) {
                throw RangeError("letter " + std::to_string(letter) + " outside alphabet of size " +
                                 std::to_string(alphabet()));
            }
            const Matrix<R>& t = trans_[letter];
            std::vector<R> next(m, ring_traits<R>::zero());
            for (std::size_t i = 0; i < m; ++i) {
                if (ring_traits<R>::is_zero(row[i])) continue;
                for (std::size_t j = 0; j < m; ++j) {
                    if (!ring_traits<R>::is_zero(t(i, j))) next[j] += row[i] * t(i, j);
                }
            }
            row = std::move(next);
        }
        R acc = ring_traits<R>::zero();
        for (std::size_t i = 0; i < m; ++i) acc += row[i] * final_[i];
        return acc;
    }

    nlohmann::json to_json() const {
        using T = ring_traits<R>;
        auto vec = [](const std::vector<R>& v) {
            nlohmann::json a = nlohmann::json::array();
            for (const auto& x : v) a.push_back(T::to_json(x));
            return a;
        };
        nlohmann::json mats = nlohmann::json::array();
        for (const auto& t : trans_) {
            nlohmann::json rows = nlohmann::json::array();
            for (std::size_t i = 0; i < t.rows(); ++i) {
                nlohmann::json row = nlohmann::json::array();
                for (std::size_t j = 0; j < t.cols(); ++j) row.push_back(T::to_json(t(i, j)));
                rows.push_back(std::move(row));
            }
            mats.push_back(std::move(rows));
        }
        return {{"ring", std::string(T::name)}, {"states", states()}, {"alphabet", alphabet()},
                {"init", vec(init_)},           {"trans", mats},      {"final", vec(final_)}};
    }

    static LinearRepresentation from_json(const nlohmann::json& j) {
        using T = ring_traits<R>;
        if (j.at("ring").get<std::string>() != T::name) throw FormatError("representation ring mismatch");
        const auto m = j.at("states").get<std::size_t>();
        auto vec = [](const nlohmann::json& a) {
            std::vector<R> v;
            for (const auto& x : a) v.push_back(T::from_json(x));
            return v;
        };
        std::vector<Matrix<R>> mats;
        for (const auto& jm : j.at("trans")) {
            Matrix<R> t(m, m);
            for (std::size_t r = 0; r < m; ++r) {
                for (std::size_t c = 0; c < m; ++c) t(r, c) = T::from_json(jm.at(r).at(c));
            }
            mats.push_back(std::move(t));
        }
        if (mats.size() != j.at("alphabet").get<std::size_t>()) throw FormatError("alphabet size mismatch");
        return LinearRepresentation(vec(j.at("init")), std::move(mats), vec(j.at("final")));
    }

    friend bool operator==(const LinearRepresentation&, const LinearRepresentation&) = default;

private:
    std::vector<R> init_;
    std::vector<Matrix<R>> trans_;
    std::vector<R> final_;
};

/// Digits of n in base k, most significant first; 0 gives the word "0".
std::vector<unsigned> expansion(std::uint64_t n, unsigned k);

/// Same state space with T(x) + I per letter: the value on a word becomes the
/// sum of the original values over all its subsequences (shuffle with the
/// series of all words).
template <ExactRing R>
LinearRepresentation<R> subsequence_transform(const LinearRepresentation<R>& rep) {
    std::vector<Matrix<R>> trans;
    const auto id = Matrix<R>::identity(rep.states());
    for (const auto& t : rep.transitions()) trans.push_back(t + id);
    return LinearRepresentation<R>(rep.init(), std::move(trans), rep.final());
}

/// Realization of the product F*G: the value on w is the sum over splits
/// w = uv of F(u) G(v).
template <ExactRing R>
LinearRepresentation<R> concatenation_product(const LinearRepresentation<R>& f, const LinearRepresentation<R>& g) {
    using T = ring_traits<R>;
    if (f.alphabet() != g.alphabet()) throw PreconditionError("alphabets differ");
    const std::size_t m = f.states(), n = g.states();
    R f_empty = T::zero();
    for (std::size_t i = 0; i < m; ++i) f_empty += f.init()[i] * f.final()[i];

    std::vector<R> init(m + n, T::zero()), final(m + n, T::zero());
    for (std::size_t i = 0; i < m; ++i) init[i] = f.init()[i];
    for (std::size_t j = 0; j < n; ++j) {
        init[m + j] = f_empty * g.init()[j];
        final[m + j] = g.final()[j];
    }
    std::vector<Matrix<R>> trans;
    for (std::size_t a = 0; a < f.alphabet(); ++a) {
        const auto& tf = f.transitions()[a];
        const auto& tg = g.transitions()[a];
        Matrix<R> t(m + n, m + n);
        for (std::size_t i = 0; i < m; ++i) {
            // (T_f(a) final_f)_i closes the F factor on this letter
            R closing = T::zero();
            for (std::size_t p = 0; p < m; ++p) {
                t(i, p) = tf(i, p);
                closing += tf(i, p) * f.final()[p];
            }
            for (std::size_t j = 0; j < n; ++j) t(i, m + j) = closing * g.init()[j];
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) t(m + i, m + j) = tg(i, j);
        }
        trans.push_back(std::move(t));
    }
    return LinearRepresentation<R>(std::move(init), std::move(trans), std::move(final));
}

/// One state, value 1 on every word: 1/(1 - (x_0 + ... + x_{k-1})).
template <ExactRing R>
LinearRepresentation<R> all_words(std::size_t k) {
    std::vector<Matrix<R>> trans(k, Matrix<R>::identity(1));
    return LinearRepresentation<R>({ring_traits<R>::one()}, std::move(trans), {ring_traits<R>::one()});
}

/// Value on w is the sum of the original values over all contiguous factors
/// of w: before-phase, the original states, after-phase.
template <ExactRing R>
LinearRepresentation<R> subfactor_transform(const LinearRepresentation<R>& rep) {
    const auto star = all_words<R>(rep.alphabet());
    return concatenation_product(concatenation_product(star, rep), star);
}

/// Characteristic series of a single word over a k-letter alphabet.
template <ExactRing R>
LinearRepresentation<R> word_indicator(std::size_t k, std::span<const unsigned> word) {
    using T = ring_traits<R>;
    const std::size_t m = word.size() + 1;
    std::vector<R> init(m, T::zero()), final(m, T::zero());
    init[0] = T::one();
    final[m - 1] = T::one();
    std::vector<Matrix<R>> trans(k, Matrix<R>(m, m));
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] >= k) throw RangeError("letter outside alphabet");
        trans[word[i]](i, i + 1) = T::one();
    }
    return LinearRepresentation<R>(std::move(init), std::move(trans), std::move(final));
}

/// x_1 (1 / (1 - weight x_0 x_1)) over the binary alphabet: value weight^j on
/// 1(01)^j, zero elsewhere. States: seeking-1, after-1 (accepting), after-10.
template <ExactRing R>
LinearRepresentation<R> admissible_pattern(const R& weight) {
    using T = ring_traits<R>;
    std::vector<Matrix<R>> trans(2, Matrix<R>(3, 3));
    trans[1](0, 1) = T::one();
    trans[0](1, 2) = T::one();
    trans[1](2, 1) = weight;
    return LinearRepresentation<R>({T::one(), T::zero(), T::zero()}, std::move(trans),
                                   {T::zero(), T::one(), T::zero()});
}

/// (weight x_1 x_0)^*: value weight^j on (10)^j, including 1 on the empty word.
template <ExactRing R>
LinearRepresentation<R> even_pattern(const R& weight) {
    using T = ring_traits<R>;
    std::vector<Matrix<R>> trans(2, Matrix<R>(2, 2));
    trans[1](0, 1) = T::one();
    trans[0](1, 0) = weight;
    return LinearRepresentation<R>({T::one(), T::zero()}, std::move(trans), {T::one(), T::zero()});
}

/// Value of the representation on the base-k expansion of n.
template <ExactRing R>
R count_in_expansion(const LinearRepresentation<R>& rep, std::uint64_t n, unsigned k) {
    if (k < 2) throw PreconditionError("expansion base must be at least 2");
    if (rep.alphabet() != k) throw PreconditionError("representation alphabet does not match base");
    const auto word = expansion(n, k);
    return rep.evaluate(word);
}

}  // namespace sternkit
