//! Objects, species templates, similarity, and equivalence-class partitions.
//!
//! An object is a bundle of named characteristics. A species template names
//! the defining subset of characteristics that members must carry; two
//! objects are similar relative to a template when both carry every defining
//! characteristic. Similarity against a fixed template is an equivalence
//! relation, so classifying a set of objects against disjoint templates
//! partitions it.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub type ObjectId = String;
pub type SpeciesId = String;
pub type PredicateId = String;

/// A named observable trait. Identity is exact equality of name and value.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Characteristic {
    pub name: String,
    pub value: String,
}

impl Characteristic {
    pub fn new(name: impl Into<String>, value: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            value: value.into(),
        }
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}={}", self.name, self.value)
    }
}

/// An object is a non-empty set of characteristics with unique names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Object {
    id: ObjectId,
    characteristics: BTreeSet<Characteristic>,
}

impl Object {
    pub fn new(
        id: impl Into<ObjectId>,
        characteristics: impl IntoIterator<Item = Characteristic>,
    ) -> Result<Self, KnowledgeError> {
        let id = id.into();
        let characteristics: BTreeSet<Characteristic> = characteristics.into_iter().collect();
        if characteristics.is_empty() {
            return Err(KnowledgeError::EmptyObject { object: id });
        }
        let mut names = BTreeSet::new();
        for c in &characteristics {
            if !names.insert(c.name.as_str()) {
                return Err(KnowledgeError::DuplicateCharacteristicName {
                    object: id.clone(),
                    name: c.name.clone(),
                });
            }
        }
        Ok(Self {
            id,
            characteristics,
        })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn characteristics(&self) -> &BTreeSet<Characteristic> {
        &self.characteristics
    }

    pub fn has(&self, c: &Characteristic) -> bool {
        self.characteristics.contains(c)
    }
}

/// The defining characteristics of a species plus the predicates attributed
/// to its members once identified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpeciesTemplate {
    species_id: SpeciesId,
    defining: BTreeSet<Characteristic>,
    profile: BTreeSet<PredicateId>,
}

impl SpeciesTemplate {
    pub fn new(
        species_id: impl Into<SpeciesId>,
        defining: impl IntoIterator<Item = Characteristic>,
        profile: impl IntoIterator<Item = PredicateId>,
    ) -> Result<Self, KnowledgeError> {
        let species_id = species_id.into();
        let defining: BTreeSet<Characteristic> = defining.into_iter().collect();
        if defining.is_empty() {
            return Err(KnowledgeError::EmptyTemplate {
                species: species_id,
            });
        }
        Ok(Self {
            species_id,
            defining,
            profile: profile.into_iter().collect(),
        })
    }

    pub fn species_id(&self) -> &str {
        &self.species_id
    }

    pub fn defining(&self) -> &BTreeSet<Characteristic> {
        &self.defining
    }

    pub fn profile(&self) -> &BTreeSet<PredicateId> {
        &self.profile
    }

    /// True when the object carries every defining characteristic.
    pub fn matches(&self, x: &Object) -> bool {
        self.defining.iter().all(|c| x.has(c))
    }
}

/// Assignment of objects to species blocks; objects matching no template are
/// left unclassified. Blocks are pairwise disjoint and cover the input
/// together with the unclassified set.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Partition {
    pub blocks: BTreeMap<SpeciesId, BTreeSet<ObjectId>>,
    pub unclassified: BTreeSet<ObjectId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KnowledgeError {
    /// An object matched two or more templates; overlap breaks partitioning.
    AmbiguousClassification {
        object: ObjectId,
        species: Vec<SpeciesId>,
    },
    /// Two templates in one knowledge base share a defining set.
    DuplicateDefiningSet {
        first: SpeciesId,
        second: SpeciesId,
    },
    EmptyObject {
        object: ObjectId,
    },
    EmptyTemplate {
        species: SpeciesId,
    },
    DuplicateCharacteristicName {
        object: ObjectId,
        name: String,
    },
}

impl fmt::Display for KnowledgeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnowledgeError::AmbiguousClassification { object, species } => {
                write!(
                    f,
                    "AmbiguousClassification({object}, [{}])",
                    species.join(", ")
                )
            }
            KnowledgeError::DuplicateDefiningSet { first, second } => {
                write!(f, "DuplicateDefiningSet({first}, {second})")
            }
            KnowledgeError::EmptyObject { object } => write!(f, "EmptyObject({object})"),
            KnowledgeError::EmptyTemplate { species } => write!(f, "EmptyTemplate({species})"),
            KnowledgeError::DuplicateCharacteristicName { object, name } => {
                write!(f, "DuplicateCharacteristicName({object}, {name})")
            }
        }
    }
}

impl std::error::Error for KnowledgeError {}

/// Similarity relative to a template: true iff both objects carry every
/// defining characteristic of `t`.
pub fn similar(x: &Object, y: &Object, t: &SpeciesTemplate) -> bool {
    t.matches(x) && t.matches(y)
}

/// Reject template lists where two templates share a defining set.
pub fn validate_templates(templates: &[SpeciesTemplate]) -> Result<(), KnowledgeError> {
    for (i, a) in templates.iter().enumerate() {
        for b in &templates[i + 1..] {
            if a.defining == b.defining {
                return Err(KnowledgeError::DuplicateDefiningSet {
                    first: a.species_id.clone(),
                    second: b.species_id.clone(),
                });
            }
        }
    }
    Ok(())
}

/// Identify the species whose defining set the object carries.
///
/// Returns `None` when no template matches and an error when more than one
/// does: overlapping matches would break the partition.
pub fn classify(
    x: &Object,
    templates: &[SpeciesTemplate],
) -> Result<Option<SpeciesId>, KnowledgeError> {
    let matches: Vec<&SpeciesTemplate> = templates.iter().filter(|t| t.matches(x)).collect();
    match matches.as_slice() {
        [] => Ok(None),
        [t] => Ok(Some(t.species_id.clone())),
        many => Err(KnowledgeError::AmbiguousClassification {
            object: x.id.clone(),
            species: many.iter().map(|t| t.species_id.clone()).collect(),
        }),
    }
}

/// Partition objects into species blocks by classification.
pub fn partition(
    objects: &[Object],
    templates: &[SpeciesTemplate],
) -> Result<Partition, KnowledgeError> {
    let mut out = Partition::default();
    for x in objects {
        match classify(x, templates)? {
            Some(species) => {
                out.blocks.entry(species).or_default().insert(x.id.clone());
            }
            None => {
                out.unclassified.insert(x.id.clone());
            }
        }
    }
    Ok(out)
}

/// Exhaustive check that template-relative similarity is an equivalence
/// relation on the objects carrying the template's defining set.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EquivalenceReport {
    /// Objects carrying the defining set, i.e. the domain of the check.
    pub members: Vec<ObjectId>,
    pub reflexivity_failures: Vec<ObjectId>,
    pub symmetry_failures: Vec<(ObjectId, ObjectId)>,
    pub transitivity_failures: Vec<(ObjectId, ObjectId, ObjectId)>,
}

impl EquivalenceReport {
    pub fn passed(&self) -> bool {
        self.reflexivity_failures.is_empty()
            && self.symmetry_failures.is_empty()
            && self.transitivity_failures.is_empty()
    }
}

/// Check reflexivity, symmetry, and transitivity of `similar(·,·,t)`
/// restricted to objects containing the defining set. Counterexamples are
/// reported, not thrown.
pub fn verify_equivalence(objects: &[Object], t: &SpeciesTemplate) -> EquivalenceReport {
    let members: Vec<&Object> = objects.iter().filter(|x| t.matches(x)).collect();
    let mut report = EquivalenceReport {
        members: members.iter().map(|x| x.id.clone()).collect(),
        ..Default::default()
    };
    for x in &members {
        if !similar(x, x, t) {
            report.reflexivity_failures.push(x.id.clone());
        }
    }
    for x in &members {
        for y in &members {
            if similar(x, y, t) != similar(y, x, t) {
                report.symmetry_failures.push((x.id.clone(), y.id.clone()));
            }
        }
    }
    for x in &members {
        for y in &members {
            for z in &members {
                if similar(x, y, t) && similar(y, z, t) && !similar(x, z, t) {
                    report
                        .transitivity_failures
                        .push((x.id.clone(), y.id.clone(), z.id.clone()));
                }
            }
        }
    }
    report
}
