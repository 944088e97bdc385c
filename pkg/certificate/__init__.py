"""
certificate: matchbound certificates, an independent checker and the JSON codec.
"""

from certificate.codec import export_json, from_dict, import_json, read_json, to_dict, write_json
from certificate.model import CertEdge, Certificate
from certificate.verify import Failure, Verdict, verify

__all__ = [
    "CertEdge",
    "Certificate",
    "Failure",
    "Verdict",
    "verify",
    "export_json",
    "import_json",
    "to_dict",
    "from_dict",
    "read_json",
    "write_json",
]
