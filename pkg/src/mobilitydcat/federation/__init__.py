"""Harvesting, federated catalog, and cross-portal search."""

from .catalog import build_index_entry, merge_into_catalog, search
from .harvest import (
    DATASET_CLASS,
    Fetcher,
    FetchResponse,
    HttpFetcher,
    harvest_source,
    split_datasets,
)
from .model import (
    CatalogRecord,
    FederatedCatalog,
    IndexEntry,
    SearchQuery,
    SourcePortal,
    parse_source_registry,
)

__all__ = [
    "CatalogRecord",
    "DATASET_CLASS",
    "FederatedCatalog",
    "Fetcher",
    "FetchResponse",
    "HttpFetcher",
    "IndexEntry",
    "SearchQuery",
    "SourcePortal",
    "build_index_entry",
    "harvest_source",
    "merge_into_catalog",
    "parse_source_registry",
    "search",
    "split_datasets",
]
