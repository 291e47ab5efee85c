"""Export module for prahmlab."""

from prahmlab.export.csv import SCHEMAS, CSVExporter
from prahmlab.export.html import HTMLExporter
from prahmlab.export.json import JSONExporter

__all__ = ["SCHEMAS", "CSVExporter", "HTMLExporter", "JSONExporter"]
