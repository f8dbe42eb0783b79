#pragma once

#include <string>
#include <vector>

#include "vassiliev/diagram.hpp"
#include "vassiliev/ops.hpp"
#include "vassiliev/weight.hpp"

namespace vassiliev {

// ---- named diagrams ----

/// Wheel: one circle with k legs, internal k-cycle, spokes leg_i - v_i;
/// cyclic order at v_i is (spoke, next, previous). k >= 1.
Diagram omega(int k);

/// Chain of k+1 circles joined by k chords. L_0 = bare circle.
Diagram family_L(int k);

/// Ring of k circles joined by k chords (k >= 2); C_0 = S^1, C_1 = L_1.
Diagram family_C(int k);

/// Two circles joined by k parallel chords. T_0 = bare circle.
Diagram family_T(int k);

/// One circle, two rails with 4 rungs (4 legs, 8 internal vertices),
/// degree 6.
Diagram psi();

/// Two circles, two connecting chords, one self-chord on the first circle
/// separating the connecting legs.
Diagram omega3_link();

/// One circle, one chord.
Diagram theta();

/// iterated t-insertion (always at vertex 0).
Diagram t_power(Diagram d, int times);

// ---- section-7 building blocks ----

/// D_{ijk} = (L_i # C_j) # T_k with canonical distinguished circles.
Diagram D_ijk(int i, int j, int k);

/// D_{ijk} padded with bare circles up to l circles total.
/// Throws std::invalid_argument if l is smaller than D_{ijk}'s circle count.
Diagram D_ijk_l(int i, int j, int k, int l);

/// E^l_n = D^l_{0,0,n} - D^l_{0,0,n-2}#omega_2 as a combo (n >= 2).
DiagramCombo E_nl(int n, int l);

/// The spanning list Sigma_n (n >= 4): Sigma_4 = {w4, t^2 w2},
/// Sigma_5 = t Sigma_4 + {w5}, Sigma_6 = t Sigma_5 + {w6, psi},
/// Sigma_7 = {w7, t w6, t^2 w5, t^3 w4, t^5 w2, x3 w4}, and for n > 7
/// Sigma_n = t Sigma_{n-1} + {w_n} (+ {x3 w_{n-3}} for even n).
std::vector<Diagram> Sigma(int n);

/// One labeled element of the list M_{n,l}.
struct MElement {
  std::string label;
  DiagramCombo combo;
};

/// The list M_{n,l} (n >= 4, l >= 2, n >= l): the Sigma_n elements plus the
/// product detector w2#(t^{n-4}w2), each with l-1 extra circles, followed by
/// the gl chain D^l_{i,0,0}#omega_m and the so chain ending in D^l_{0,0,n}
/// and E^l_n. card = n+l-3+floor((n+l-1)/2).
std::vector<MElement> M_list(int n, int l);

int M_card(int n, int l);

// ---- closed forms and sequences ----

enum class Family { omega, L, C, T };

/// The printed value of the deframed weight system on the family member;
/// throws std::invalid_argument outside the stated ranges (in particular
/// there is no gl closed form for C_k).
Poly closed_form(Family fam, WeightFlavor flavor, int k);

/// a_2 = 2, a_{k+1} = 2 a_k - 4(-1)^k.
Rational seq_a(int k);
/// R_k(c) = a_k + sum_{i=1}^{k-2} (-1)^{k-i} (c-2)^i.
Poly seq_R(int k);
/// Q_k = so closed form of T_k divided by c(c-1).
Poly seq_Q(int k);
/// P_k = 2^{k-1} - c^{k-1}(1-c)^{k-1}.
Poly seq_P(int k);
/// (d_1,e_1) = (0,1), (d_{k+1},e_{k+1}) = (d_k+e_k, 2 d_k).
std::pair<Rational, Rational> seq_de(int k);

// ---- CLI-facing family specs ----

/// Parses "omega:4", "L:3", "T:2", "C:3", "psi", "Omega3", "theta",
/// "D:i,j,k@l", "E:n,l", "t^m:spec" etc. Throws std::invalid_argument.
/// "Sigma:n" and "M:n,l" address lists and are handled by callers that
/// accept lists.
Diagram build_diagram_spec(const std::string& spec);

/// Combos addressed by spec: every diagram spec plus "E:n,l".
DiagramCombo build_combo_spec(const std::string& spec);

/// Lists: "Sigma:n" and "M:n,l"; single specs yield a one-element list.
std::vector<std::pair<std::string, DiagramCombo>> build_list_spec(
    const std::string& spec);

}  // namespace vassiliev
