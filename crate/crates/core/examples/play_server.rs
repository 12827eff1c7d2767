//! Starts the play server on a free port, opens a session against the
//! successor strategy over HTTP, plays one move and adjudicates.
//!
//! cargo run --example play_server -- --serve   keeps it running on port 8080

use std::io::{Read, Write};
use std::net::{SocketAddr, TcpStream};
use std::sync::Arc;

use clarith::harness::{spawn_server, PlayServer};
use clarith::strategies::Limits;

fn request(addr: SocketAddr, method: &str, path: &str, body: &str) -> String {
    let mut s = TcpStream::connect(addr).unwrap();
    write!(
        s,
        "{method} {path} HTTP/1.1\r\nHost: {addr}\r\nContent-Type: application/json\r\nContent-Length: {}\r\nConnection: close\r\n\r\n{body}",
        body.len()
    )
    .unwrap();
    let mut out = String::new();
    s.read_to_string(&mut out).unwrap();
    let (head, body) = out.split_once("\r\n\r\n").unwrap();
    format!("{} {body}", head.lines().next().unwrap())
}

fn main() {
    let server = Arc::new(PlayServer::new(Limits::default()));
    if std::env::args().any(|a| a == "--serve") {
        let h = spawn_server(server, 8080, 4).unwrap();
        println!("listening on http://{}", h.addr);
        h.join();
        return;
    }
    let h = spawn_server(server, 0, 2).unwrap();
    let addr = h.addr;
    println!("listening on http://{addr}\n");
    let steps = [
        ("POST", "/sessions", r#"{"formula": "AAx. EEy. y = x'", "strategy": "axiom8", "bound": 32}"#),
        ("POST", "/sessions/0/move", r#"{"player": "environment", "path": [], "payload": {"const": 9}}"#),
        ("POST", "/sessions/0/move", r#"{"player": "environment", "path": [], "payload": {"const": 1}}"#),
        ("POST", "/sessions/0/adjudicate", ""),
        ("POST", "/sessions", r#"{"formula": "0 = 0 vv ~0 = 0"}"#),
        ("GET", "/sessions", ""),
        ("DELETE", "/sessions/1", ""),
    ];
    for (method, path, body) in steps {
        println!("{method} {path} {body}\n  -> {}\n", request(addr, method, path, body));
    }
    h.shutdown();
}
