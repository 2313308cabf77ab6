use crate::spinor::Sl2c;
use crate::Result;

use super::BwComponent;

/// Spinor transformation of a component: unprimed indices by `A`, primed by
/// `Ā`, momentum by the induced Lorentz matrix.
pub fn transform_component(psi: &BwComponent, a: &Sl2c) -> Result<BwComponent> {
    let m = a.cospinor_matrix();
    let mb = m.conjugate();
    let comps = psi.comps.iter().map(|c| c.map_slots(&m, &mb)).collect();
    BwComponent::new(psi.n, psi.mass, psi.energy, a.transform_vector(&psi.p), comps)
}
