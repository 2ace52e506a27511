from .parser import ComplexDocument, CoverDocument, dump_complex, dump_cover, load_document, parse_complex, parse_cover

__all__ = [
    "ComplexDocument",
    "CoverDocument",
    "dump_complex",
    "dump_cover",
    "load_document",
    "parse_complex",
    "parse_cover",
]
