"""
Standard input/output protocol implementation for MCP.

This module implements the MCP protocol using stdin/stdout communication.
"""

import logging

from mcp.server.stdio import stdio_server

from .base import MCPProtocol

logger = logging.getLogger(__name__)


class StdioProtocol(MCPProtocol):
    """MCP protocol implementation using standard input/output."""

    def __init__(self, server_name: str = "vorder-toolkit", server_version: str = "1.0.0"):
        """Initialize the stdio protocol.

        Args:
            server_name: Name of the MCP server
            server_version: Version of the server
        """
        super().__init__(server_name, server_version)

    async def run(self) -> None:
        """Run the stdio protocol server."""
        logger.info("Serving V-order tools over stdio")
        async with stdio_server() as (read_stream, write_stream):
            await self.app.run(read_stream, write_stream, self.initialization_options())
