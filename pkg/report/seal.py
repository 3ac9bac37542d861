"""Decision record sealing with integrity proof."""

from typing import Any, Dict

from engine.util.json import canonical_sha256

PROOF_KEY = "integrity_proof"


def seal_record(record: Dict[str, Any]) -> Dict[str, Any]:
    """
    Seal a decision record with an integrity proof.

    The proof is the SHA-256 of the canonical JSON of the record without
    its proof, so any edit to a sealed record breaks the seal.

    Args:
        record: Record dictionary (any existing integrity_proof is replaced)

    Returns:
        Sealed record with integrity_proof
    """
    unsealed = {k: v for k, v in record.items() if k != PROOF_KEY}
    sealed = dict(unsealed)
    sealed[PROOF_KEY] = {
        "algorithm": "sha256",
        "hash": canonical_sha256(unsealed),
    }
    return sealed


def verify_seal(record: Dict[str, Any]) -> bool:
    """
    Verify a record seal.

    Args:
        record: Sealed record dictionary

    Returns:
        True if seal is valid
    """
    proof = record.get(PROOF_KEY)
    if not isinstance(proof, dict) or proof.get("algorithm") != "sha256":
        return False
    expected = proof.get("hash")
    if not expected:
        return False
    unsealed = {k: v for k, v in record.items() if k != PROOF_KEY}
    return canonical_sha256(unsealed) == expected
