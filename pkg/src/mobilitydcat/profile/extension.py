"""Extension-rule checking: obligations and cardinalities may only tighten.

An extension may raise an obligation, raise a minimum cardinality or lower a
maximum, and may narrow a vocabulary or range binding, but never the reverse.
Properties the extension does not restate are inherited unchanged; entirely
new classes and properties never violate.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import BaseMismatch
from ..rdf import Iri
from .model import ClassProfile, Profile, PropertyProfile, card_le


@dataclass(frozen=True)
class ExtensionViolation:
    class_iri: Iri
    property_iri: Iri | None
    kind: str
    detail: str

    def __str__(self) -> str:
        where = f"{self.class_iri}"
        if self.property_iri is not None:
            where += f" / {self.property_iri}"
        return f"{self.kind}: {where}: {self.detail}"


def _class_narrows(profiles: tuple[Profile, ...], sub: Iri, super_: Iri) -> bool:
    """sub equals super or is declared its (transitive) subclass in either profile."""
    seen = set()
    node: Iri | None = sub
    while node is not None and node not in seen:
        if node == super_:
            return True
        seen.add(node)
        parent = None
        for profile in profiles:
            cls = profile.class_profile(node)
            if cls is not None and cls.sub_class_of is not None:
                parent = cls.sub_class_of
                break
        node = parent
    return False


def _check_property(
    profiles: tuple[Profile, ...],
    extension: Profile,
    cls: ClassProfile,
    base_prop: PropertyProfile,
    ext_prop: PropertyProfile,
) -> list[ExtensionViolation]:
    where = dict(class_iri=cls.class_iri, property_iri=base_prop.property_iri)
    out = []
    if ext_prop.obligation < base_prop.obligation:
        out.append(ExtensionViolation(
            kind="obligation-lowered",
            detail=f"{base_prop.obligation} lowered to {ext_prop.obligation}",
            **where,
        ))
    if ext_prop.min_card < base_prop.min_card:
        out.append(ExtensionViolation(
            kind="min-cardinality-lowered",
            detail=f"{base_prop.min_card} lowered to {ext_prop.min_card}",
            **where,
        ))
    if not card_le(ext_prop.max_card, base_prop.max_card):
        out.append(ExtensionViolation(
            kind="max-cardinality-raised",
            detail=f"{base_prop.max_card!r} raised to {ext_prop.max_card!r}",
            **where,
        ))
    if base_prop.vocabulary is not None:
        if ext_prop.vocabulary is None:
            out.append(ExtensionViolation(
                kind="vocabulary-dropped",
                detail=f"base binds scheme {base_prop.vocabulary}",
                **where,
            ))
        elif not extension.scheme_narrows(ext_prop.vocabulary, base_prop.vocabulary):
            out.append(ExtensionViolation(
                kind="vocabulary-widened",
                detail=(
                    f"{ext_prop.vocabulary} is not declared a sub-scheme of "
                    f"{base_prop.vocabulary}"
                ),
                **where,
            ))
    if base_prop.range_class is not None:
        if ext_prop.range_class is None:
            out.append(ExtensionViolation(
                kind="range-dropped",
                detail=f"base requires range {base_prop.range_class}",
                **where,
            ))
        elif not _class_narrows(profiles, ext_prop.range_class, base_prop.range_class):
            out.append(ExtensionViolation(
                kind="range-widened",
                detail=(
                    f"{ext_prop.range_class} is not declared a subclass of "
                    f"{base_prop.range_class}"
                ),
                **where,
            ))
    return out


def check_extension(base: Profile, extension: Profile) -> list[ExtensionViolation]:
    """Empty iff every restated (class, property) only tightens the base."""
    if extension.base_profile != base.id and extension.id != base.id:
        raise BaseMismatch(
            f"extension declares base {extension.base_profile}, expected {base.id}"
        )
    profiles = (extension, base)
    violations: list[ExtensionViolation] = []
    for base_cls in base.classes:
        ext_cls = extension.class_profile(base_cls.class_iri)
        if ext_cls is None:
            continue  # inherited unchanged
        for base_prop in base_cls.properties:
            ext_prop = ext_cls.property(base_prop.property_iri)
            if ext_prop is None:
                continue  # inherited unchanged
            violations.extend(
                _check_property(profiles, extension, base_cls, base_prop, ext_prop)
            )
    return violations
