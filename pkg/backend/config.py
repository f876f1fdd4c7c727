"""
Average-Degree Partition Solver - Configuration
Environment variables and settings
"""
import os
from pathlib import Path
from dotenv import load_dotenv

# Base directory
BASE_DIR = Path(__file__).resolve().parent.parent

# Load environment variables from .env file
load_dotenv(BASE_DIR / '.env')

# API Configuration
API_HOST = os.getenv("API_HOST", "0.0.0.0")
API_PORT = int(os.getenv("API_PORT", "8001"))
MAX_API_VERTICES = int(os.getenv("MAX_API_VERTICES", "2000"))

# Oracle caps (exhaustive search is 2^n)
ORACLE_PARTITION_CAP = int(os.getenv("ORACLE_PARTITION_CAP", "24"))
ORACLE_FACT5_CAP = int(os.getenv("ORACLE_FACT5_CAP", "20"))

# Re-evaluate objectives from scratch after every exchange move
AUDIT_MOVES = os.getenv("AUDIT_MOVES", "False").lower() == "true"

# Logging
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
LOG_FILE = os.getenv("LOG_FILE", "logs/avgdeg_partition.log")

VERSION = "1.0.0"
