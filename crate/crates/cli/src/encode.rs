//! Library objects to documents.

use moddeg::algebra::{Algebra, AlgebraKind};
use moddeg::modrep::{Module, ModuleMorphism};
use moddeg::orders::RiedtmannWitness;
use moddeg::{FieldTower, Matrix, Scalar};

use crate::doc::{
    AlgebraBody, ArrowDoc, FamilyBody, FieldBody, MatrixDoc, ModuleBody, ModuleForm, MorphismBody, Ref, Row,
    SequenceBody,
};

pub fn row<F: Scalar>(v: &[F]) -> Row {
    v.iter().map(Scalar::to_canonical).collect()
}

pub fn matrix<F: Scalar>(m: &Matrix<F>) -> MatrixDoc {
    (0..m.rows()).map(|r| row(m.row(r))).collect()
}

pub fn field<F: Scalar>(t: &FieldTower<F>) -> FieldBody {
    FieldBody {
        base: F::base_label(),
        min_poly: row(t.min_poly()),
        generator: t.gen_name().to_string(),
        automorphisms: t.automorphisms().iter().map(|a| row(a.coeffs())).collect(),
    }
}

/// Constructor form where one exists, structure constants otherwise.
pub fn algebra<F: Scalar>(a: &Algebra<F>) -> AlgebraBody {
    let base = F::base_label();
    match a.kind() {
        AlgebraKind::Path(q) => AlgebraBody::Path {
            base,
            vertices: q.vertices(),
            arrows: q
                .arrows()
                .iter()
                .map(|x| ArrowDoc { source: x.source, target: x.target, name: x.label.clone() })
                .collect(),
        },
        AlgebraKind::Exterior(n) => AlgebraBody::Exterior { base, vars: *n },
        AlgebraKind::TruncatedPolynomial(n) => AlgebraBody::Truncated { base, n: *n },
        AlgebraKind::Field(t) => AlgebraBody::Field { base, tower: Ref::Inline(Box::new(field(t))) },
        AlgebraKind::Extension(tag) => AlgebraBody::Extension {
            base,
            tower: Ref::Inline(Box::new(field(&tag.tower))),
            lambda: Ref::Inline(Box::new(algebra(&tag.lambda))),
        },
        AlgebraKind::StructureConstants | AlgebraKind::MatrixSpan | AlgebraKind::Quotient => {
            AlgebraBody::StructureConstants {
                base,
                names: Some(a.basis_names().to_vec()),
                unit: row(a.unit()),
                table: a.table().iter().map(|r| r.iter().map(|c| row(c)).collect()).collect(),
            }
        }
    }
}

pub fn module_with<F: Scalar>(m: &Module<F>, algebra: Ref<AlgebraBody>) -> ModuleBody {
    ModuleBody {
        base: F::base_label(),
        algebra,
        form: ModuleForm::Generators { dim: m.dim(), generators: m.generator_action().iter().map(matrix).collect() },
    }
}

pub fn module<F: Scalar>(m: &Module<F>) -> ModuleBody {
    module_with(m, Ref::Inline(Box::new(algebra(m.algebra()))))
}

pub fn morphism<F: Scalar>(f: &ModuleMorphism<F>) -> MorphismBody {
    MorphismBody {
        base: F::base_label(),
        source: Ref::Inline(Box::new(module(f.source()))),
        target: Ref::Inline(Box::new(module(f.target()))),
        matrix: matrix(f.matrix()),
    }
}

pub fn sequence_with<F: Scalar>(w: &RiedtmannWitness<F>, refs: [Ref<ModuleBody>; 3]) -> SequenceBody {
    let [x, m, n] = refs;
    SequenceBody { base: F::base_label(), x, m, n, g: matrix(w.g.matrix()), h: matrix(w.h.matrix()) }
}

pub fn sequence<F: Scalar>(w: &RiedtmannWitness<F>) -> SequenceBody {
    let inline = |m: &Module<F>| Ref::Inline(Box::new(module(m)));
    sequence_with(w, [inline(&w.x), inline(&w.m), inline(&w.n)])
}

pub fn family<F: Scalar>(members: &[Module<F>]) -> FamilyBody {
    FamilyBody { base: F::base_label(), members: members.iter().map(|m| Ref::Inline(Box::new(module(m)))).collect() }
}
