#pragma once

#include "stabmod/gmod/algebra_object.hpp"
#include "stabmod/stable/stable.hpp"

#include <array>
#include <compare>

namespace stabmod::descent {

using f2::BitMatrix;
using f2::BitVector;
using gmod::AModule;
using gmod::ModulePtr;

/// Cosimplicial object T => T(x)T ... of an algebra object; layer n is T^{(x)(n+1)}.
struct AmitsurComplex
{
    hopf::HopfPtr ambient;
    gmod::AlgebraObject t;
    int n_max = 0;
    std::vector<ModulePtr> layers;
    /// cofaces[n][i] : layer n-1 -> layer n inserts the unit at slot i (n >= 1, 0 <= i <= n).
    std::vector<std::vector<BitMatrix>> cofaces;
    /// codegeneracies[n][i] : layer n+1 -> layer n multiplies slots i, i+1 (0 <= i <= n).
    std::vector<std::vector<BitMatrix>> codegeneracies;
};

/// Throws std::invalid_argument if a cosimplicial identity or module-map condition fails.
AmitsurComplex amitsur(hopf::HopfPtr a, const gmod::AlgebraObject& t, int n_max);
std::vector<std::string> check_cosimplicial(const AmitsurComplex& c);

/// Level n, Ext degree (s, t) in the internal grading (cochains of degree t send degree k to k - t).
struct Tridegree
{
    int n = 0, s = 0, t = 0;
    auto operator<=>(const Tridegree&) const = default;
};
std::string to_string(const Tridegree& d);

struct PageWindow
{
    int s_min = 0, s_max = 0, t_min = 0, t_max = 0, n_min = 0, n_max = 0;
    bool contains(const Tridegree& d) const;
};

/// One page of a descent spectral sequence with d1 between neighbouring levels.
struct SSPage
{
    std::string label;
    int r = 1;
    PageWindow window;
    std::map<Tridegree, int> dims;
    /// basis[d]: columns span the entry; E1 columns are Ext coordinates, E2 columns are E1 coordinates.
    std::map<Tridegree, BitMatrix> basis;
    /// d1[d] : entry d -> entry (n+1, s, t) in page bases; only on E1.
    std::map<Tridegree, BitMatrix> d1;
    std::map<Tridegree, std::vector<std::string>> labels;
    /// Problems found while building (for example d1 d1 != 0).
    std::vector<std::string> warnings;
    /// False when no A-structure fixes d1 (E1 only); e2 refuses such pages.
    bool d1_determined = true;

    int dim(const Tridegree& d) const;
    int dim(int n, int s, int t) const { return dim(Tridegree{n, s, t}); }
    int total() const;
};

/// Level n entry is N^n Ext_A(m, T^{(x)(n+1)} (x) m); normalized by intersecting codegeneracy kernels
/// unless normalize is false. d1 is the sum of the coface maps.
SSPage e1_end(hopf::HopfPtr a, const gmod::AlgebraObject& t, const AModule& m, const PageWindow& w, bool normalize = true);
/// Homology of d1.
SSPage e2(const SSPage& e1);
/// d1 d1 = 0 on every computed entry; empty if it holds.
std::vector<std::string> check_page(const SSPage& p);

/// A module over the subalgebra E together with an action S of one further generator g of A, subject
/// only to the relations linear in g: for every generator q of E, q g + g q = c_q in E gives q S + S q = c_q.
struct FirstOrderModule
{
    hopf::SubHopfInclusion inc;
    int generator = 0; // ambient basis index of g
    AModule module;    // over inc.sub
    BitMatrix s;
};
std::vector<std::string> validate_first_order(const FirstOrderModule& x);
/// Some S for m (deterministic choice), or nullopt if none exists.
/// All degree-correct S satisfying the linear relations: particular + span(directions).
struct FirstOrderSpace
{
    BitMatrix particular;
    std::vector<BitMatrix> directions;
};
std::optional<FirstOrderSpace> first_order_space(const hopf::SubHopfInclusion& inc, int generator, const AModule& m);
std::optional<BitMatrix> find_first_order_datum(const hopf::SubHopfInclusion& inc, int generator, const AModule& m);
FirstOrderModule first_order_restriction(const hopf::SubHopfInclusion& inc, int generator, const AModule& ambient_module);
FirstOrderModule first_order_tensor(const FirstOrderModule& x, const FirstOrderModule& y);
FirstOrderModule first_order_dual(const FirstOrderModule& x);
/// Coefficients for End: m* (x) m.
FirstOrderModule first_order_end(const FirstOrderModule& m);

/// E1 over the subalgebra: level n entry is Ext_E^{s, t - n|g|}(1, X) and d1 is the action of g on Ext_E(1, X).
/// Requires A//E two-dimensional, spanned by 1 and the image of g.
SSPage e1_first_order(const FirstOrderModule& x, const PageWindow& w);
/// The same E1 entries for an E-module with no first-order datum; d1 is left undetermined.
SSPage e1_without_datum(const hopf::SubHopfInclusion& inc, int generator, const AModule& x, const PageWindow& w);
/// Pairing E1(End 1) (x) E1(End X) -> E1(End X) on the subalgebra route: levels add and classes multiply
/// by the cup product in Ext_E. Classes are in the Ext coordinates used by e1_first_order.
class E1Pairing
{
public:
    E1Pairing(const FirstOrderModule& unit, const FirstOrderModule& x, const PageWindow& w);

    BitVector multiply(const Tridegree& a, const BitVector& ca, const Tridegree& y, const BitVector& cy) const;
    /// d1(a y) = d1(a) y + a d1(y) on all basis pairs with s >= 0 whose product lies in the window.
    struct LeibnizReport
    {
        int checked = 0;
        std::vector<std::string> failures;
    };
    LeibnizReport leibniz() const;

    const SSPage& unit_page() const { return unit_page_; }
    const SSPage& page() const { return page_; }

private:
    BitVector d1(const SSPage& p, const Tridegree& d, const BitVector& c) const;

    FirstOrderModule unit_, x_;
    PageWindow w_;
    SSPage unit_page_, page_;
    std::shared_ptr<const stable::CompleteResolution> res_;
    int dg_ = 0;
};

/// Normalized E1 dimensions via Ext_E(U m, U(Tbar^{(x)n} (x) m)), Tbar the cokernel of the unit of T.
std::map<Tridegree, int> e1_dims_via_subalgebra(const hopf::SubHopfInclusion& inc, const AModule& m, const PageWindow& w);

/// Affine change of coordinates (n, s, t) -> external (s', t', n').
struct IndexTranslation
{
    std::string name;
    std::array<std::array<int, 3>, 3> matrix{}; // rows: s', t', n'; columns: n, s, t
    std::array<int, 3> offset{};

    std::array<int, 3> apply(const Tridegree& d) const;
    Tridegree invert(int s, int t, int n) const;
};
/// External (s, t, n) = (-s, t, n): homotopy degree first, internal degree unchanged, level unchanged.
IndexTranslation homotopy_translation();

/// Direct sum of shifted polynomial (or Laurent) modules in external coordinates.
struct PresentationSummand
{
    std::string shift_name;
    std::array<int, 3> shift{};
    struct Generator
    {
        std::string name;
        std::array<int, 3> degree{};
        bool laurent = false;
    };
    std::vector<Generator> generators;
};
using Presentation = std::vector<PresentationSummand>;

struct PresentationCount
{
    std::map<std::array<int, 3>, int> dims;
    std::map<std::array<int, 3>, std::vector<std::string>> monomials;
};
/// Monomials of the presentation in the external box [s_min, s_max] x [t_min, t_max] x [n_min, n_max].
PresentationCount count_presentation(const Presentation& p, const std::array<int, 6>& box);

struct PresentationComparison
{
    bool match = true;
    int checked = 0;
    std::vector<std::string> mismatches;
};
PresentationComparison compare_with_presentation(const SSPage& page, const IndexTranslation& tr, const Presentation& p,
                                                 const std::array<int, 6>& box);
/// The internal window covering an external box.
PageWindow window_for_box(const IndexTranslation& tr, const std::array<int, 6>& box);

/// Picard page rebuilt from an End page: entry (n, s) for s >= 2 is End at external (s - 1, 0, n).
struct PicPage
{
    std::map<std::pair<int, int>, int> dims; // (n, s), s >= 2, dimensions over F
    std::map<int, std::string> pic0;         // n -> group in the s = 0 row, as supplied
    std::vector<std::string> notes;

    int dim(int n, int s) const
    {
        auto it = dims.find({n, s});
        return it == dims.end() ? 0 : it->second;
    }
};
/// The s = 1 row is trivial for the algebras handled here; pic0_row must not be empty.
PicPage pic_page_from_end(const SSPage& end_page, const std::map<int, std::string>& pic0_row,
                          const IndexTranslation& tr = homotopy_translation());
/// Classes of the End page on the external diagonal (s, 0, s + 1), keyed by internal tridegree.
std::map<Tridegree, int> end_diagonal(const SSPage& end_page, const IndexTranslation& tr = homotopy_translation());

/// Per total degree comparison of E2 with the abutment.
struct ReconcileRow
{
    int total = 0;
    int t = 0;
    int e2_dim = 0;
    int abutment_dim = 0;
};
struct ReconcileReport
{
    std::vector<ReconcileRow> rows;
    bool contradiction = false;
    int min_differential_rank = 0;
    std::string summary;
};
/// total(n, s, t) = s + n at fixed t for End pages; abutment given on the same internal t.
/// Differentials raise the total degree by one at fixed t, so a surplus must be paired off between neighbours.
ReconcileReport reconcile(const SSPage& e2_page, const stable::BigradedChart& abutment);

} // namespace stabmod::descent
