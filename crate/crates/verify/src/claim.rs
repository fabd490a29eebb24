/// The identities and statements a check can stand behind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Claim {
    /// `K = sqrt(B) j` and its three-branch `j`.
    KMetric,
    /// gT-parity and invariance under spatial reflections and rotations.
    Parities,
    /// `K = |T| V(w)` and the derivative rules of `V` and `j`.
    GenV,
    /// Closed-form covariant momenta.
    Momenta,
    /// The equator `T = 0` is the unit sphere of the spatial block.
    Equator,
    /// Axis intercepts `T₁`, `T₂`.
    AxisIntercepts,
    /// Profile slope, its limits and concavity.
    Profile,
    /// The widest ring `(f, k)`.
    Ring,
    /// Regularity and convexity of the Finsleroid.
    Convexity,
    /// The τ-image of the indicatrix is a sphere of radius `r`.
    SphereImage,
    /// Euler contractions of τ and λ.
    EulerContraction,
    /// Jacobian of τ, its determinant and the auxiliary contractions.
    Jacobian,
    /// The quasi-Euclidean tensor and its contraction rules.
    QuasiEuclidean,
    /// The pulled-back quasi-Euclidean tensor is the Finslerian metric tensor.
    Pullback,
    /// `H` evaluated on the momenta reproduces `K`.
    Legendre,
    /// gT̂-parity and P̂-parity of `H`.
    HatParities,
    /// Derivative rules of `W` and `ĵ`.
    GenW,
    /// `ĵ j`, `Q/Q̂` and `V²W²` relations along the `w ↔ p` map.
    JProduct,
    /// The `w ↔ p` map and the `T T̂` relations.
    WpMap,
    /// Intercepts, ring and profile of the co-Finsleroid.
    CoLandmarks,
    /// Regularity and convexity of the co-Finsleroid.
    CoConvexity,
    /// `H(g; ·) = K(-g; ·)`.
    Mirror,
    /// Relativistic metric, its constants, profile and convexity.
    SrMetric,
    /// Relativistic landmarks `c`, `s`, `z`.
    SrLandmarks,
    /// `H_SR(g; ·) = F_SR(-g; ·)` and the gradient duality.
    SrMirror,
}

impl Claim {
    pub const ALL: [Claim; 25] = [
        Claim::KMetric,
        Claim::Parities,
        Claim::GenV,
        Claim::Momenta,
        Claim::Equator,
        Claim::AxisIntercepts,
        Claim::Profile,
        Claim::Ring,
        Claim::Convexity,
        Claim::SphereImage,
        Claim::EulerContraction,
        Claim::Jacobian,
        Claim::QuasiEuclidean,
        Claim::Pullback,
        Claim::Legendre,
        Claim::HatParities,
        Claim::GenW,
        Claim::JProduct,
        Claim::WpMap,
        Claim::CoLandmarks,
        Claim::CoConvexity,
        Claim::Mirror,
        Claim::SrMetric,
        Claim::SrLandmarks,
        Claim::SrMirror,
    ];
}
