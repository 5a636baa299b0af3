#ifndef QDRESS_FREEU_HPP
#define QDRESS_FREEU_HPP

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qdress/scalar.hpp"

namespace qdress {

/// Letter of the U_q(so(5)) alphabet.
///
/// Cartan letters carry an integer half-power k and stand for q^{k H_i / 2},
/// so q^{H_i} is k = 2 and q^{-H_i / 2} is k = -1. Raise is X_i^+ and Lower
/// is X_i^-.
struct Gen {
    enum class Kind { Cartan, Raise, Lower };

    Kind kind = Kind::Cartan;
    int index = 1;
    int k = 0;

    static Gen cartan(int i, int k) { return {Kind::Cartan, i, k}; }
    static Gen qH(int i) { return cartan(i, 2); }
    static Gen raise(int i) { return {Kind::Raise, i, 0}; }
    static Gen lower(int i) { return {Kind::Lower, i, 0}; }

    bool is_cartan() const { return kind == Kind::Cartan; }

    auto operator<=>(const Gen&) const = default;
    bool operator==(const Gen&) const = default;
};

/// The six named generators in canonical order: qH1, qH2, E1, E2, F1, F2.
const std::vector<std::pair<std::string, Gen>>& named_generators();
std::string generator_name(const Gen& g);

/// Word in the free algebra. Adjacent Cartan letters with the same index are
/// merged and Cartan letters with k = 0 are dropped.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<Gen> letters);
    explicit Word(const std::vector<Gen>& letters);

    const std::vector<Gen>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }

    void push_back(const Gen& g);
    friend Word operator*(const Word& a, const Word& b);

    auto operator<=>(const Word&) const = default;
    bool operator==(const Word&) const = default;

private:
    std::vector<Gen> letters_;
};

/// Element of the free algebra: Word -> nonzero Scalar.
class UElement {
public:
    using Map = std::map<Word, Scalar>;

    UElement() = default;
    UElement(const Word& w, const Scalar& c = Scalar(1)) { add_term(w, c); }  // NOLINT

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word& w, const Scalar& c);
    UElement& operator+=(const UElement& o);
    UElement& operator-=(const UElement& o);
    friend UElement operator+(UElement a, const UElement& b) { return a += b; }
    friend UElement operator-(UElement a, const UElement& b) { return a -= b; }
    friend UElement operator*(const UElement& a, const UElement& b);
    UElement scaled(const Scalar& s) const;

    bool operator==(const UElement&) const = default;

private:
    Map terms_;
};

/// Formal sum of Word (x) Word with Scalar coefficients.
class TensorSum {
public:
    using Key = std::pair<Word, Word>;
    using Map = std::map<Key, Scalar>;

    TensorSum() = default;

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word& left, const Word& right, const Scalar& c);
    TensorSum& operator+=(const TensorSum& o);
    /// Componentwise product (a (x) b)(c (x) d) = ac (x) bd.
    friend TensorSum operator*(const TensorSum& a, const TensorSum& b);

    bool operator==(const TensorSum&) const = default;

private:
    Map terms_;
};

/// Coproduct of a single letter.
TensorSum coproduct(const Gen& g);
/// Multiplicative extension to words and linear extension to elements.
TensorSum coproduct(const Word& w);
TensorSum coproduct(const UElement& x);

/// Counit: 1 on Cartan letters, 0 on X_i^{+-}, multiplicative on words.
Scalar counit(const Word& w);

struct Relation {
    std::string id;
    UElement element;
};

/// Defining relations of U_q(so(5)) as free-algebra elements that vanish in
/// U. Relations with a (q - q^{-1}) denominator are stored cleared.
const std::vector<Relation>& defining_relations();

}  // namespace qdress

#endif
