"""Well-known namespace IRIs used across the toolkit."""

RDF = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS = "http://www.w3.org/2000/01/rdf-schema#"
XSD = "http://www.w3.org/2001/XMLSchema#"
OWL = "http://www.w3.org/2002/07/owl#"
SKOS = "http://www.w3.org/2004/02/skos/core#"
SH = "http://www.w3.org/ns/shacl#"
DCAT = "http://www.w3.org/ns/dcat#"
DCT = "http://purl.org/dc/terms/"
FOAF = "http://xmlns.com/foaf/0.1/"
VCARD = "http://www.w3.org/2006/vcard/ns#"

# mobilityDCAT-AP terms and the toolkit's own SHACL extension parameter.
MOBILITYDCATAP = "https://w3id.org/mobilitydcat-ap#"
MOBILITYDCATAP_VOCAB = "https://w3id.org/mobilitydcat-ap/"
MDCAT_SHACL = "https://w3id.org/mobilitydcat-ap/shacl#"

# EU Publications Office authority tables.
EU_AUTHORITY = "http://publications.europa.eu/resource/authority/"

RDF_TYPE = RDF + "type"
RDF_FIRST = RDF + "first"
RDF_REST = RDF + "rest"
RDF_NIL = RDF + "nil"
RDF_LANG_STRING = RDF + "langString"

RDFS_SUBCLASS_OF = RDFS + "subClassOf"
RDFS_LABEL = RDFS + "label"

XSD_STRING = XSD + "string"
XSD_INTEGER = XSD + "integer"
XSD_DECIMAL = XSD + "decimal"
XSD_DOUBLE = XSD + "double"
XSD_BOOLEAN = XSD + "boolean"

OWL_IMPORTS = OWL + "imports"
OWL_VERSION_INFO = OWL + "versionInfo"

# The single non-standard SHACL constraint parameter this toolkit defines:
# ties a property's values to membership of a SKOS concept scheme.
IN_SCHEME_CONSTRAINT = MDCAT_SHACL + "inScheme"

COMMON_PREFIXES = {
    "rdf": RDF,
    "rdfs": RDFS,
    "xsd": XSD,
    "owl": OWL,
    "skos": SKOS,
    "sh": SH,
    "dcat": DCAT,
    "dct": DCT,
    "foaf": FOAF,
    "mobilitydcatap": MOBILITYDCATAP,
}
