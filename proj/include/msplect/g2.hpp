#pragma once

#include "msplect/comomentum.hpp"

#include <array>
#include <string>
#include <vector>

namespace msplect {

// The standard G2 3-form on a 7-dim chart x1..x7.
Form phi0(const ChartPtr& chart);

// G2 structure data for the standard (phi0, Euclidean) gauge, or the
// R + C^3 torus presentation phi = Omega_3 - dt ^ omega_3 on the chart
// (t, x1, x2, x3, y1, y2, y3). The metric is the identity in both gauges;
// the orientation is fixed by the defining identity
//   (X ⌟ phi) ^ (Y ⌟ phi) ^ phi = -6 g(X,Y) vol,
// which is verified on all basis pairs at construction.
class G2Data {
  public:
    static G2Data standard(ChartPtr chart);
    static G2Data standard7(); // on x1..x7
    static G2Data torus();     // on (t, x1..x3, y1..y3)

    const ChartPtr& chart() const { return chart_; }
    const Form& phi() const { return phi_; }
    const Form& psi() const { return psi_; }
    const Form& vol() const { return vol_; }
    int orientation() const { return orientation_; } // vol = orientation * dx^{1..7}

    Form flat(const MultiVec& X) const;   // X^b, identity metric
    MultiVec sharp(const Form& a) const;  // a^#, identity metric

    // Hodge star for the Euclidean metric and the recorded orientation.
    Form star(const Form& tau) const;

    MultiVec cross(const MultiVec& X, const MultiVec& Y) const;

    // (curl X)^b = *(d X^b ^ psi).
    MultiVec curl(const MultiVec& X) const;
    // curl(X)^l = sum_{i,j} d_i X^j phi_{ijl} (flat Levi-Civita).
    MultiVec curl_coordinates(const MultiVec& X) const;

    struct TwoFormSplit {
        Form part7;
        Form part14;
        MultiVec potential; // part7 = potential ⌟ phi
    };
    // pi_7(a) = (a - *(phi ^ a))/3, pi_14(a) = (2a + *(phi ^ a))/3.
    TwoFormSplit split2(const Form& alpha) const;

    struct HamiltonianCheck {
        bool hamiltonian = false;
        MultiVec field; // curl(alpha^#) when hamiltonian
    };
    // alpha in Omega^1 is Hamiltonian iff pi_14(d alpha) = 0; the field is
    // then curl(alpha^#) (satisfying d alpha = curl(alpha^#) ⌟ phi).
    HamiltonianCheck hamiltonian_check(const Form& alpha) const;

  private:
    G2Data() = default;
    void finalize(); // derives psi, vol, orientation; verifies the identities

    ChartPtr chart_;
    Form phi_;
    Form psi_;
    Form vol_;
    int orientation_ = 1;
};

struct G2TorusReport {
    std::vector<ResidualEntry> entries;
    std::string convention_note;
    bool all_zero() const {
        for (const auto& e : entries)
            if (!e.zero) return false;
        return !entries.empty();
    }
};

// The full R^7 = R + C^3 torus verification: generators A and B, the
// co-momentum components f1((1,0)), f1((0,1)), f2(A^B) in expanded real
// coordinates, the curl/cross identities and the weak co-momentum residuals.
G2TorusReport g2_torus_example();

} // namespace msplect
