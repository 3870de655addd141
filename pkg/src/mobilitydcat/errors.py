"""Exception hierarchy for the toolkit.

Every error raised on purpose by this package derives from ToolkitError so
callers (notably the CLI) can tell operational failures apart from bugs.
"""


class ToolkitError(Exception):
    """Base class for all errors raised by this package."""


# --- RDF terms and graphs ---------------------------------------------------

class MalformedIri(ToolkitError):
    """IRI text is relative, empty, or contains illegal characters."""


class InvalidLiteral(ToolkitError):
    """Literal breaks the datatype/language-tag rules."""


class InvalidTriple(ToolkitError):
    """Triple with a literal subject or a non-IRI predicate."""


class MalformedList(ToolkitError):
    """rdf:first/rdf:rest chain is broken, branching, or cyclic."""


# --- Parsing and serialization ----------------------------------------------

class ParseError(ToolkitError):
    """Syntax error in an RDF document, with position information."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")


class UnknownPrefix(ParseError):
    """Prefixed name uses a prefix that was never declared."""


class UnsupportedFormat(ToolkitError):
    """Serialization format outside the supported set."""


# --- SHACL ---------------------------------------------------------------

class UnresolvableImport(ToolkitError):
    """owl:imports names a graph the resolver does not know."""


class MalformedShape(ToolkitError):
    """Shape graph breaks a structural rule (e.g. property shape without path)."""


# --- Profiles -------------------------------------------------------------

class ProfileSyntaxError(ToolkitError):
    """Profile document does not follow the documented grammar."""


class ProfileConsistencyError(ToolkitError):
    """Profile content breaks an invariant (duplicate property, bad cardinality)."""


class BaseMismatch(ToolkitError):
    """Extension profile does not declare the given base as its base."""


# --- Vocabularies -----------------------------------------------------------

class TableSyntaxError(ToolkitError):
    """Tabular document (vocabulary or mapping CSV) is malformed."""


class DuplicateConceptIri(ToolkitError):
    """Two table rows mint the same concept IRI."""


class DanglingBroader(ToolkitError):
    """broader column references an IRI outside the scheme."""


class CyclicBroader(ToolkitError):
    """broader relation contains a cycle."""


class MissingLabel(ToolkitError):
    """Concept row carries no preferred label at all."""


class UnknownConcept(ToolkitError):
    """Label lookup for an IRI that is not in the scheme."""


class BundleCorrupt(ToolkitError):
    """A bundled vocabulary file failed to load."""


# --- Mapping ---------------------------------------------------------------

class OrphanValueMapping(ToolkitError):
    """Value mapping for a field that has no field mapping."""


# --- Federation --------------------------------------------------------------

class FetchFailed(ToolkitError):
    """HTTP fetch failed (network error or status >= 400)."""


class ParseFailed(ToolkitError):
    """Harvested or submitted body is not valid in the negotiated format."""


# --- Service ----------------------------------------------------------------

class NotAcceptable(ToolkitError):
    """No representation satisfies the Accept header (HTTP 406)."""


class MalformedAcceptHeader(ToolkitError):
    """Accept header cannot be parsed (HTTP 400)."""


class UnknownRoute(ToolkitError):
    """Request path names an unknown resource or version (HTTP 404)."""
